"""
Path: src/problems/recorder.py
Registro monótono de evaluaciones de un ensayo: contador, mejor valor,
eventos de mejora y primer instante en que se alcanza cada objetivo.
"""

import math
from typing import Dict, Iterable, List, Optional, Tuple

import numpy as np


class EvaluationRecorder:
    """
    Contador de evaluaciones con bookkeeping de mejoras y objetivos.

    Los objetivos son precisiones Δf relativas a `f_reference` (normalmente
    f_opt del problema): el objetivo t se alcanza cuando value - f_reference <= t.
    Con f_reference = 0 los objetivos son valores absolutos de f.

    Un recorder pertenece a un único ensayo; no es seguro compartirlo entre hilos.
    """

    def __init__(self, targets: Iterable[float] = (), f_reference: float = 0.0):
        self.eval_count: int = 0
        self.best_f: float = math.inf
        self.best_x: Optional[np.ndarray] = None
        self.events: List[Tuple[int, float]] = []
        self.targets_hit: Dict[float, int] = {}
        self.f_reference = float(f_reference)
        # pendientes en orden descendente: el mayor se alcanza primero
        self._pending: List[float] = sorted({float(t) for t in targets}, reverse=True)
        self._lowest_target: Optional[float] = self._pending[-1] if self._pending else None

    def record(self, value: float, x: Optional[np.ndarray] = None) -> None:
        """
        Registra una evaluación del objetivo.

        Args:
            value: Valor devuelto por la función
            x: Punto evaluado (se guarda una copia si mejora)
        """
        self.eval_count += 1
        if value < self.best_f:
            self.best_f = value
            self.events.append((self.eval_count, value))
            if x is not None:
                self.best_x = np.array(x, dtype=float, copy=True)
            self._mark_targets(value - self.f_reference)

    def _mark_targets(self, delta: float) -> None:
        while self._pending and delta <= self._pending[0]:
            self.targets_hit[self._pending.pop(0)] = self.eval_count

    def budget_left(self, budget: int) -> bool:
        "True si todavía se puede evaluar sin superar `budget`."
        return self.eval_count < budget

    @property
    def final_target_hit(self) -> bool:
        "True cuando se alcanzó el objetivo más exigente (si hay objetivos)."
        return self._lowest_target is not None and self._lowest_target in self.targets_hit

    def replay_targets(self, targets: Iterable[float]) -> Dict[float, int]:
        """
        Reconstruye el primer índice de acierto de cada objetivo a partir de los eventos.
        Sirve como verificación cruzada de targets_hit.
        """
        hits = {}
        for target in targets:
            for index, best in self.events:
                if best - self.f_reference <= target:
                    hits[float(target)] = index
                    break
        return hits

"""
Path: src/linesearch/brent_step.py
Solver híbrido Brent-STEP: Brent local sobre el mejor tramo de una partición
y paso permanente a STEP sobre todo el intervalo cuando Brent deja de mejorar.

Las fases son:
    PARTITION  evalúa (opcionalmente los extremos y) los P puntos medios
    BRENT      rondas de Brent desde el mejor punto conocido
    STEP       STEP sobre [a, b] sembrado con todos los puntos ya evaluados
    DONE       no queda nada por evaluar

Los valores internos se guardan relativos a `offset`: desplazar todos los
valores por la misma constante no altera ninguna decisión de Brent ni de
STEP, así que rebase() es O(1).
"""

import math
from enum import Enum
from typing import Callable, List, Optional, Tuple

from src.config.constants import BRENT_PARTITIONS, BRENT_STEP_EPSILON, BRENT_TOL
from src.linesearch.brent import BrentState, check_interval, recording
from src.linesearch.step import StepState
from src.utils.simple_logger import LoggerService

logger = LoggerService()


class Phase(Enum):
    """Fase actual del solver híbrido."""
    PARTITION = "partition"
    BRENT = "brent"
    STEP = "step"
    DONE = "done"


class BrentStepSolver:
    """
    Solver univariado reanudable: cada advance() realiza a lo sumo una evaluación.

    Args:
        interval: (a, b) con a < b
        tol: Tolerancia de Brent en x
        epsilon: Mejora mínima para considerar exitosa una ronda de Brent,
            y margen de STEP
        partitions: Número P de subintervalos de la partición inicial
        x0, f0: Punto ya evaluado (el incumbente en BSrr)
        endpoints_first: Evaluar a y b antes de los puntos medios
        stop_on_success: Terminar tras la primera ronda de Brent exitosa;
            si es False, cada éxito abre una nueva ronda desde el mejor punto
    """

    def __init__(self, interval: Tuple[float, float], tol: float = BRENT_TOL,
                 epsilon: float = BRENT_STEP_EPSILON, partitions: int = BRENT_PARTITIONS,
                 x0: Optional[float] = None, f0: Optional[float] = None,
                 endpoints_first: bool = False, stop_on_success: bool = False):
        self.a, self.b = check_interval(interval)
        if not epsilon > 0:
            raise ValueError(f"epsilon debe ser positivo, recibido {epsilon}")
        if partitions < 1:
            raise ValueError(f"partitions debe ser >= 1, recibido {partitions}")
        self.tol = tol
        self.epsilon = epsilon
        self.stop_on_success = stop_on_success
        self.offset = 0.0
        self.phase = Phase.PARTITION
        self.brent: Optional[BrentState] = None
        self.step_state: Optional[StepState] = None
        self.reference = math.inf
        self.brent_rounds = 0
        self.last_evaluation: Optional[Tuple[float, float]] = None

        self._known: List[Tuple[float, float]] = []
        self._x_best: Optional[float] = None
        self._f_best = math.inf
        if x0 is not None and f0 is not None:
            self._remember(float(x0), float(f0))

        self._partitions = partitions
        self._width = (self.b - self.a) / partitions
        self._pending: List[float] = [self.a, self.b] if endpoints_first else []
        self._pending.extend(self.a + (k + 0.5) * self._width for k in range(partitions))

    @property
    def best(self) -> Tuple[Optional[float], float]:
        "(x, f) del mejor punto evaluado por el solver, en valores reales."
        return self._x_best, self._f_best + self.offset

    @property
    def known_points(self) -> List[Tuple[float, float]]:
        "Puntos evaluados (x, f) que el solver conserva, en valores reales."
        return [(position, internal + self.offset) for position, internal in self._known]

    def rebase(self, delta: float) -> None:
        "Desplaza todos los valores cacheados en `delta` (cambio del incumbente en otra línea)."
        self.offset += delta

    def invalidate(self, x0: float, f0: float) -> None:
        """
        Descarta los valores cacheados porque la recta cambió y reancla el solver
        en el incumbente (x0, f0). Conserva la fase y el corchete actual.

        PARTITION vuelve a encolar los puntos ya evaluados, BRENT abre una ronda
        nueva sobre el mismo corchete y STEP reinicia la partición de [a, b].
        """
        x0, f0 = float(x0), float(f0)
        stale = sorted({position for position, _ in self._known if position != x0})
        self.offset = 0.0
        self._known = []
        self._x_best, self._f_best = None, math.inf
        self._remember(x0, f0)
        if self.phase is Phase.PARTITION:
            self._pending = stale + self._pending
        elif self.phase is Phase.BRENT:
            left, right = self.brent.a, self.brent.b
            if self.brent.converged or not left <= x0 <= right:
                left, right = self._cell(x0)
            self.brent = BrentState(left, right, x0, f0, tol=self.tol)
            self.reference = f0
        elif self.step_state is not None:
            self._start_step()

    def _cell(self, x: float) -> Tuple[float, float]:
        "Subintervalo de la partición inicial que contiene a x."
        k = min(int((x - self.a) // self._width), self._partitions - 1)
        left = self.a + k * self._width
        right = self.b if k == self._partitions - 1 else left + self._width
        return min(left, x), max(right, x)

    def _remember(self, position: float, internal: float) -> None:
        self._known.append((position, internal))
        if internal < self._f_best:
            self._x_best, self._f_best = position, internal

    def _evaluate(self, objective: Callable[[float], float], position: float) -> float:
        value = objective(position)
        internal = value - self.offset
        self._remember(position, internal)
        self.last_evaluation = (position, value)
        return internal

    def _start_brent_round(self) -> None:
        x = self._x_best
        if self.brent_rounds == 0:
            # primera ronda: el subintervalo de la partición con el mejor punto
            left, right = self._cell(x)
        else:
            # rondas siguientes: vecinos ordenados del mejor punto, o los extremos
            positions = sorted({p for p, _ in self._known})
            left = max((p for p in positions if p < x), default=self.a)
            right = min((p for p in positions if p > x), default=self.b)
        if not left < right:
            self._start_step()
            return
        self.brent = BrentState(left, right, x, self._f_best, tol=self.tol)
        self.reference = self._f_best
        self.brent_rounds += 1
        self.phase = Phase.BRENT

    def _finish_brent_round(self) -> None:
        improvement = self.reference - self.brent.fx
        if improvement > self.epsilon:
            if self.stop_on_success:
                self.phase = Phase.DONE
            else:
                self._start_brent_round()
            return
        logger.debug(f"Brent sin mejora en [{self.a}, {self.b}], se activa STEP")
        self._start_step()

    def _start_step(self) -> None:
        self.brent = None
        self.step_state = StepState(self.epsilon)
        for position, internal in self._known:
            self.step_state.add_point(position, internal)
        self._pending = [p for p in (self.a, self.b) if p not in self.step_state.positions]
        self.phase = Phase.STEP

    def advance(self, objective: Callable[[float], float]) -> bool:
        """
        Avanza hasta realizar una evaluación de `objective`.

        Returns:
            True si evaluó un punto, False si el solver está agotado
        """
        while True:
            if self.phase is Phase.PARTITION:
                if self._pending:
                    self._evaluate(objective, self._pending.pop(0))
                    return True
                self._start_brent_round()
            elif self.phase is Phase.BRENT:
                if self.brent.converged:
                    self._finish_brent_round()
                    continue
                u = self.brent.next_point()
                self.brent.tell(u, self._evaluate(objective, u))
                return True
            elif self.phase is Phase.STEP:
                if self._pending:
                    position = self._pending.pop(0)
                    self.step_state.add_point(position, self._evaluate(objective, position))
                    return True
                index = self.step_state.select()
                if index is None:
                    self.phase = Phase.DONE
                    continue
                midpoint = self.step_state.split_point(index)
                self.step_state.add_point(midpoint, self._evaluate(objective, midpoint))
                return True
            else:
                return False

    @property
    def used_step(self) -> bool:
        "True si el solver pasó a la fase STEP."
        return self.step_state is not None


def brent_step_minimize(f1d: Callable[[float], float], interval: Tuple[float, float],
                        tol: float, epsilon: float, recorder, budget: int,
                        x0: Optional[float] = None,
                        solver_out: Optional[list] = None) -> Tuple[float, float]:
    """
    Minimiza f1d con Brent-STEP.

    Evalúa ambos extremos, luego los P puntos medios, ejecuta Brent en el tramo
    del mejor punto y, si Brent no mejora en más de epsilon, cambia a STEP sobre
    todo el intervalo hasta agotar el presupuesto.

    Args:
        x0: Punto de arranque ya conocido (se evalúa y cuenta)
        solver_out: Si se pasa una lista, se le agrega el solver usado

    Returns:
        (x*, f*) mejor punto encontrado
    """
    a, b = check_interval(interval)
    if budget < 1:
        raise ValueError(f"budget debe ser >= 1, recibido {budget}")
    objective = recording(f1d, recorder)
    f0 = None
    if x0 is not None and recorder.budget_left(budget):
        f0 = objective(x0)
    solver = BrentStepSolver((a, b), tol=tol, epsilon=epsilon, x0=x0, f0=f0,
                             endpoints_first=True, stop_on_success=True)
    if solver_out is not None:
        solver_out.append(solver)
    while recorder.budget_left(budget) and solver.advance(objective):
        pass
    logger.debug(f"Brent-STEP terminado en fase {solver.phase.value}, "
                 f"{recorder.eval_count} evaluaciones")
    return solver.best

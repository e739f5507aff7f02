"""
Path: src/models/trial_log.py
Registro serializable de un ensayo (algoritmo, función, dimensión, instancia)
y conjunto de precisiones objetivo.

Formato de archivo (texto por líneas):
    # algorithm = HJ-5
    # function = f1
    # dim = 20
    # instance = 1
    # seed = 123
    # budget = 200000
    # total_evals = 1843
    # best_x_distance = 3.1e-09
    <eval_index> <best_f - f_opt>      (una línea por evento de mejora)
    # target <precisión> <eval_index>  (bloque final de objetivos alcanzados)
Los reales se escriben con repr(), que garantiza ida y vuelta exacta.
"""

import math
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from src.config.constants import LOG_FILE_SUFFIX, SMALLEST_TARGET, TARGET_PRECISIONS

HEADER_KEYS = ("algorithm", "function", "dim", "instance", "seed", "budget",
               "total_evals", "best_x_distance")


class LogFormatError(ValueError):
    """Archivo de ensayo mal formado."""


@dataclass(frozen=True)
class TargetSet:
    """Precisiones Δf estrictamente decrecientes que incluyen 1e-8."""
    precisions: Tuple[float, ...] = TARGET_PRECISIONS

    def __post_init__(self):
        values = tuple(float(p) for p in self.precisions)
        if not values:
            raise ValueError("el conjunto de objetivos no puede estar vacío")
        if any(p <= 0 for p in values):
            raise ValueError("las precisiones objetivo deben ser positivas")
        if any(b >= a for a, b in zip(values, values[1:])):
            raise ValueError("las precisiones objetivo deben ser estrictamente decrecientes")
        if SMALLEST_TARGET not in values:
            raise ValueError(f"el conjunto de objetivos debe contener {SMALLEST_TARGET}")
        object.__setattr__(self, "precisions", values)

    @classmethod
    def from_values(cls, values: Iterable[float]) -> "TargetSet":
        "Ordena de mayor a menor y construye el conjunto."
        return cls(tuple(sorted({float(v) for v in values}, reverse=True)))

    @property
    def smallest(self) -> float:
        "Precisión más exigente."
        return self.precisions[-1]

    def __len__(self) -> int:
        return len(self.precisions)

    def __iter__(self):
        return iter(self.precisions)


@dataclass(frozen=True)
class TrialLog:
    """
    Resultado de un ensayo, suficiente para recalcular ERT y ECDF sin reejecutar.

    events: pares (eval_index, best_f - f_opt), índices crecientes y valores
    estrictamente decrecientes.
    """
    algorithm_id: str
    function_id: str
    dimension: int
    instance_id: int
    seed: int
    budget: int
    events: Tuple[Tuple[int, float], ...]
    total_evals: int
    targets_hit: Dict[float, int] = field(default_factory=dict)
    best_x_distance: float = math.nan

    @property
    def group_key(self) -> Tuple[str, int, str]:
        "(función, dimensión, algoritmo)."
        return (self.function_id, self.dimension, self.algorithm_id)

    @property
    def sort_key(self) -> Tuple[str, int, int, int]:
        "Orden determinista (algoritmo, función, dimensión, instancia)."
        return (self.algorithm_id, _function_number(self.function_id),
                self.dimension, self.instance_id)

    @property
    def file_name(self) -> str:
        "Nombre de archivo canónico del ensayo."
        return (f"{self.algorithm_id}_{self.function_id}_d{self.dimension:03d}"
                f"_i{self.instance_id:02d}{LOG_FILE_SUFFIX}")

    @property
    def final_delta(self) -> float:
        "Mejor Δf al final del ensayo (inf si no hubo evaluaciones)."
        return self.events[-1][1] if self.events else math.inf

    def first_hit(self, precision: float) -> Optional[int]:
        "Primer índice de evaluación con Δf <= precision, o None."
        for index, delta in self.events:
            if delta <= precision:
                return index
        return None

    def best_delta_within(self, evaluations: int) -> float:
        "Mejor Δf alcanzado en las primeras `evaluations` evaluaciones."
        best = math.inf
        for index, delta in self.events:
            if index > evaluations:
                break
            best = delta
        return best

    def to_text(self) -> str:
        "Serializa al formato de archivo de ensayo."
        lines = [
            f"# algorithm = {self.algorithm_id}",
            f"# function = {self.function_id}",
            f"# dim = {self.dimension}",
            f"# instance = {self.instance_id}",
            f"# seed = {self.seed}",
            f"# budget = {self.budget}",
            f"# total_evals = {self.total_evals}",
            f"# best_x_distance = {self.best_x_distance!r}",
        ]
        lines.extend(f"{index} {delta!r}" for index, delta in self.events)
        for precision in sorted(self.targets_hit, reverse=True):
            lines.append(f"# target {precision!r} {self.targets_hit[precision]}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "TrialLog":
        """
        Reconstruye un TrialLog desde su forma textual.

        Raises:
            LogFormatError: si faltan claves de cabecera o hay líneas inválidas
        """
        header: Dict[str, str] = {}
        events: List[Tuple[int, float]] = []
        targets: Dict[float, int] = {}
        for number, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line:
                continue
            try:
                if line.startswith("# target "):
                    _, _, precision, index = line.split()
                    targets[float(precision)] = int(index)
                elif line.startswith("#"):
                    key, value = line[1:].split("=", 1)
                    header[key.strip()] = value.strip()
                else:
                    index, delta = line.split()
                    events.append((int(index), float(delta)))
            except ValueError as e:
                raise LogFormatError(f"línea {number} inválida: {raw!r}") from e

        missing = [key for key in HEADER_KEYS if key not in header]
        if missing:
            raise LogFormatError(f"faltan claves de cabecera: {', '.join(missing)}")
        try:
            return cls(
                algorithm_id=header["algorithm"],
                function_id=header["function"],
                dimension=int(header["dim"]),
                instance_id=int(header["instance"]),
                seed=int(header["seed"]),
                budget=int(header["budget"]),
                events=tuple(events),
                total_evals=int(header["total_evals"]),
                targets_hit=targets,
                best_x_distance=float(header["best_x_distance"]),
            )
        except ValueError as e:
            raise LogFormatError(f"valor de cabecera inválido: {e}") from e

    @classmethod
    def from_recorder(cls, recorder, problem, algorithm_id: str, seed: int,
                      budget: int) -> "TrialLog":
        """
        Construye el registro a partir del recorder de un ensayo terminado.

        Los eventos se convierten a Δf = best_f - f_opt; si dos mejoras
        consecutivas colapsan al mismo Δf se conserva solo la primera.
        """
        events: List[Tuple[int, float]] = []
        for index, best in recorder.events:
            delta = float(best - problem.f_opt)
            if events and delta >= events[-1][1]:
                continue
            events.append((index, delta))
        distance = math.nan
        if recorder.best_x is not None:
            distance = float(max(abs(a - b) for a, b in zip(recorder.best_x, problem.x_opt)))
        return cls(
            algorithm_id=algorithm_id,
            function_id=problem.function_id.label,
            dimension=problem.dimension,
            instance_id=problem.instance_id,
            seed=int(seed),
            budget=int(budget),
            events=tuple(events),
            total_evals=recorder.eval_count,
            targets_hit=dict(recorder.targets_hit),
            best_x_distance=distance,
        )


def _function_number(label: str) -> int:
    digits = "".join(ch for ch in label if ch.isdigit())
    return int(digits) if digits else 0


def check_same_group(logs: Sequence[TrialLog], what: str) -> None:
    """
    Verifica que todos los registros compartan (función, dimensión).

    Raises:
        ValueError: si la lista está vacía o mezcla claves
    """
    if not logs:
        raise ValueError(f"{what}: se necesita al menos un registro")
    keys = {(log.function_id, log.dimension) for log in logs}
    if len(keys) > 1:
        raise ValueError(f"{what}: registros con claves (función, dimensión) mezcladas: {sorted(keys)}")

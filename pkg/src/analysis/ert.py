"""
Path: src/analysis/ert.py
Tiempo de ejecución esperado (ERT) para una precisión objetivo.
"""

import math
from dataclasses import dataclass
from typing import Optional, Sequence

from src.models.trial_log import TrialLog, check_same_group


@dataclass(frozen=True)
class ErtResult:
    """
    ERT de un grupo (función, dimensión, algoritmo).

    ert es None cuando ningún ensayo alcanzó el objetivo; si no,
    ert == total_evals_counted / n_success.
    """
    target_precision: float
    ert: Optional[float]
    n_success: int
    n_trials: int
    total_evals_counted: int

    @property
    def defined(self) -> bool:
        return self.ert is not None

    def formatted(self) -> str:
        "ERT como texto; el ERT indefinido se escribe 'inf'."
        return "inf" if self.ert is None else repr(self.ert)

    def per_dimension(self, dimension: int) -> float:
        "ERT / D (inf si no está definido)."
        return math.inf if self.ert is None else self.ert / dimension


def compute_ert(logs: Sequence[TrialLog], target_precision: float) -> ErtResult:
    """
    Suma las evaluaciones ejecutadas antes de alcanzar f_opt + Δf en todos los
    ensayos (los exitosos aportan su primer acierto, los fallidos su total)
    y divide por la cantidad de ensayos exitosos.

    Raises:
        ValueError: lista vacía o registros de distintos (función, dimensión, algoritmo)
    """
    check_same_group(logs, "compute_ert")
    algorithms = {log.algorithm_id for log in logs}
    if len(algorithms) > 1:
        raise ValueError(f"compute_ert: registros de varios algoritmos: {sorted(algorithms)}")

    total = 0
    successes = 0
    for log in logs:
        hit = log.first_hit(target_precision)
        if hit is None:
            total += log.total_evals
        else:
            total += hit
            successes += 1
    ert = total / successes if successes else None
    return ErtResult(target_precision=float(target_precision), ert=ert, n_success=successes,
                     n_trials=len(logs), total_evals_counted=total)

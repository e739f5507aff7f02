"""
Path: src/analysis/ranksum.py
Test de suma de rangos (Mann-Whitney U) con p exacto para muestras chicas
y construcción de muestras a partir de ensayos.
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import List, Sequence, Tuple

import numpy as np
from scipy import stats

from src.models.trial_log import TrialLog, check_same_group

EXACT_MAX_SIZE = 10


class RankSumMethod(Enum):
    EXACT = "exact"
    NORMAL_APPROX = "normal_approx"


@dataclass(frozen=True)
class RankSumResult:
    """Estadístico U de la muestra a, tamaños y p bilateral."""
    u_statistic: float
    n_a: int
    n_b: int
    p_value: float
    method: RankSumMethod


def build_comparison_samples(logs_a: Sequence[TrialLog], logs_b: Sequence[TrialLog],
                             target_precision: float) -> Tuple[List[float], List[float]]:
    """
    Convierte dos conjuntos de ensayos en muestras comparables.

    Un ensayo exitoso aporta -1/FE_hit (siempre negativo). Uno fallido aporta
    su mejor Δf dentro de las primeras m evaluaciones, con m el mínimo de
    total_evals entre todos los fallidos de ambos conjuntos. Así todo éxito
    queda por debajo de todo fracaso.

    Raises:
        ValueError: conjunto vacío o claves (función, dimensión) distintas
    """
    check_same_group(list(logs_a) + list(logs_b), "build_comparison_samples")
    if not logs_a or not logs_b:
        raise ValueError("build_comparison_samples: ambos conjuntos deben ser no vacíos")

    failures = [log.total_evals for log in (*logs_a, *logs_b)
                if log.first_hit(target_precision) is None]
    cutoff = min(failures) if failures else 0

    def sample(logs: Sequence[TrialLog]) -> List[float]:
        values = []
        for log in logs:
            hit = log.first_hit(target_precision)
            if hit is not None:
                values.append(-1.0 / hit)
            else:
                values.append(log.best_delta_within(cutoff))
        return values

    return sample(logs_a), sample(logs_b)


def _exact_two_sided(doubled_ranks: np.ndarray, n_a: int, observed: int) -> float:
    # cuenta subconjuntos de tamaño n_a por suma de rangos (duplicados a enteros)
    n = doubled_ranks.size
    center = n_a * (n + 1)
    max_sum = int(doubled_ranks.sum())
    counts = [[0] * (max_sum + 1) for _ in range(n_a + 1)]
    counts[0][0] = 1
    for rank in doubled_ranks.astype(int):
        for k in range(n_a, 0, -1):
            previous, current = counts[k - 1], counts[k]
            for s in range(max_sum - rank, -1, -1):
                if previous[s]:
                    current[s + rank] += previous[s]
    distance = abs(observed - center)
    extreme = sum(count for s, count in enumerate(counts[n_a]) if abs(s - center) >= distance)
    return min(1.0, extreme / math.comb(n, n_a))


def _normal_two_sided(u: float, n_a: int, n_b: int, ranks: np.ndarray) -> float:
    n = n_a + n_b
    _, ties = np.unique(ranks, return_counts=True)
    tie_term = float((ties ** 3 - ties).sum())
    variance = n_a * n_b / 12.0 * ((n + 1) - tie_term / (n * (n - 1)))
    if variance <= 0:
        return 1.0
    z = (abs(u - n_a * n_b / 2.0) - 0.5) / math.sqrt(variance)
    return float(min(1.0, 2.0 * stats.norm.sf(z)))


def rank_sum_test(sample_a: Sequence[float], sample_b: Sequence[float]) -> RankSumResult:
    """
    Test bilateral de suma de rangos con rangos medios para empates.

    p exacto por enumeración de todas las asignaciones de rangos cuando
    ambos tamaños son <= 10; si no, aproximación normal con varianza
    corregida por empates y corrección de continuidad.

    Raises:
        ValueError: si alguna muestra está vacía
    """
    a = np.asarray(sample_a, dtype=float)
    b = np.asarray(sample_b, dtype=float)
    if a.size == 0 or b.size == 0:
        raise ValueError("rank_sum_test: las muestras no pueden estar vacías")
    n_a, n_b = a.size, b.size
    ranks = stats.rankdata(np.concatenate([a, b]))
    rank_sum_a = float(ranks[:n_a].sum())
    u = rank_sum_a - n_a * (n_a + 1) / 2.0

    if n_a <= EXACT_MAX_SIZE and n_b <= EXACT_MAX_SIZE:
        doubled = np.rint(2.0 * ranks)
        p_value = _exact_two_sided(doubled, n_a, int(round(2.0 * rank_sum_a)))
        method = RankSumMethod.EXACT
    else:
        p_value = _normal_two_sided(u, n_a, n_b, ranks)
        method = RankSumMethod.NORMAL_APPROX
    return RankSumResult(u_statistic=u, n_a=n_a, n_b=n_b, p_value=p_value, method=method)

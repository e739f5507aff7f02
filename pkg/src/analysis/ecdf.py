"""
Path: src/analysis/ecdf.py
ECDF simple (sin bootstrap) de pares (ensayo, objetivo) resueltos en
función del presupuesto.
"""

from typing import Dict, Iterable, List, Sequence, Tuple

import numpy as np

from src.config.constants import ECDF_DECADES, ECDF_STEP_DECADES
from src.models.trial_log import TargetSet, TrialLog


def budget_grid_per_dim(decades: Tuple[float, float] = ECDF_DECADES,
                        step: float = ECDF_STEP_DECADES) -> np.ndarray:
    "Grilla logarítmica de evaluaciones/D, de 10^decades[0] a 10^decades[1]."
    count = int(round((decades[1] - decades[0]) / step)) + 1
    return 10.0 ** np.linspace(decades[0], decades[1], count)


def _hit_matrix(logs: Sequence[TrialLog], targets: Iterable[float],
                per_dimension: bool) -> np.ndarray:
    "Primer acierto de cada par (ensayo, objetivo); inf si no se alcanzó."
    rows: List[List[float]] = []
    for log in logs:
        scale = float(log.dimension) if per_dimension else 1.0
        row = []
        for precision in targets:
            hit = log.first_hit(precision)
            row.append(np.inf if hit is None else hit / scale)
        rows.append(row)
    return np.asarray(rows, dtype=float)


def compute_ecdf(logs: Sequence[TrialLog], targets: TargetSet, budget_grid: Sequence[float],
                 per_dimension: bool = False) -> np.ndarray:
    """
    Fracción de pares (ensayo, objetivo) alcanzados con a lo sumo g evaluaciones,
    para cada g de la grilla.

    Args:
        logs: Ensayos a agregar (pueden mezclar funciones y dimensiones)
        targets: Precisiones Δf
        budget_grid: Valores crecientes de presupuesto
        per_dimension: Si es True la grilla se interpreta como evaluaciones / D

    Raises:
        ValueError: entradas vacías o grilla no ordenada
    """
    precisions = tuple(targets)
    grid = np.asarray(budget_grid, dtype=float)
    if not logs or not precisions or grid.size == 0:
        raise ValueError("compute_ecdf: se requieren registros, objetivos y grilla no vacíos")
    if np.any(np.diff(grid) < 0):
        raise ValueError("compute_ecdf: la grilla de presupuestos debe ser creciente")
    hits = _hit_matrix(logs, precisions, per_dimension).ravel()
    hits.sort()
    solved = np.searchsorted(hits, grid, side="right")
    return solved / float(hits.size)


def group_logs(logs: Iterable[TrialLog], key) -> Dict[object, List[TrialLog]]:
    "Agrupa registros según key(log), en orden de primera aparición."
    groups: Dict[object, List[TrialLog]] = {}
    for log in logs:
        groups.setdefault(key(log), []).append(log)
    return groups

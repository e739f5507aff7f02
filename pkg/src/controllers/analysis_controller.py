"""
Path: src/controllers/analysis_controller.py
Controlador de análisis: lee los ensayos de una suite y escribe las tablas
CSV de ERT, ECDF, suma de rangos y escalamiento del ERT con la dimensión.
"""

import csv
import os
from typing import Iterable, List, Optional, Sequence, Tuple

from src.analysis.ecdf import budget_grid_per_dim, compute_ecdf, group_logs
from src.analysis.ert import compute_ert
from src.config.constants import ECDF_DECADES
from src.analysis.ranksum import build_comparison_samples, rank_sum_test
from src.models.trial_log import TargetSet, TrialLog
from src.problems.functions import FUNCTION_GROUPS, FunctionId, functions_in_group
from src.utils.simple_logger import LoggerService

logger = LoggerService()

ERT_HEADER = ("function", "dim", "algorithm", "target", "ert", "n_success", "n_trials")
ECDF_HEADER = ("group", "budget_per_dim", "fraction")
RANKSUM_HEADER = ("function", "dim", "target", "alg_a", "alg_b", "U", "p")
SCALING_HEADER = ("function", "algorithm", "dim", "target", "ert_per_dim")

GROUP_BY_CHOICES = ("algorithm", "group")


def _function_order(label: str) -> int:
    return FunctionId.parse(label).value


def _write_rows(path: str, header: Sequence[str], rows: Iterable[Sequence]) -> int:
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    count = 0
    with open(path, "w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow(row)
            count += 1
    logger.debug(f"{count} filas escritas en {path}")
    return count


def _fmt(value: float) -> str:
    return "inf" if value == float("inf") else repr(float(value))


class AnalysisController:
    """Calcula métricas sobre un conjunto de ensayos y las escribe como CSV."""

    def __init__(self, logs: Sequence[TrialLog], targets: Optional[TargetSet] = None):
        if not logs:
            raise ValueError("AnalysisController: no hay ensayos para analizar")
        self.logs = list(logs)
        self.targets = targets or TargetSet()

    @property
    def algorithms(self) -> Tuple[str, ...]:
        return tuple(sorted({log.algorithm_id for log in self.logs}))

    def _by_key(self):
        return group_logs(sorted(self.logs, key=lambda log: log.sort_key),
                          lambda log: (_function_order(log.function_id), log.dimension,
                                       log.algorithm_id))

    def ert_rows(self) -> List[Tuple]:
        rows = []
        groups = self._by_key()
        for key in sorted(groups):
            logs = groups[key]
            first = logs[0]
            for precision in self.targets:
                result = compute_ert(logs, precision)
                rows.append((first.function_id, first.dimension, first.algorithm_id,
                             repr(precision), result.formatted(), result.n_success,
                             result.n_trials))
        return rows

    def ecdf_rows(self, group_by: str = "algorithm",
                  decades: Tuple[float, float] = ECDF_DECADES) -> List[Tuple]:
        """
        Filas de ECDF por grupo; la grilla es evaluaciones / D.

        group_by = 'algorithm' agrega todas las funciones y dimensiones de cada
        algoritmo; group_by = 'group' separa además por grupo de funciones.
        """
        if group_by not in GROUP_BY_CHOICES:
            raise ValueError(f"group_by debe ser uno de {GROUP_BY_CHOICES}, recibido {group_by!r}")
        grid = budget_grid_per_dim(decades)
        if group_by == "algorithm":
            groups = group_logs(self.logs, lambda log: log.algorithm_id)
        else:
            groups = {}
            for group in FUNCTION_GROUPS + ("all",):
                members = set(functions_in_group(group))
                for log in self.logs:
                    if FunctionId.parse(log.function_id) in members:
                        groups.setdefault(f"{log.algorithm_id}/{group}", []).append(log)
        rows = []
        for name in sorted(groups):
            fractions = compute_ecdf(groups[name], self.targets, grid, per_dimension=True)
            rows.extend((name, f"{g:.6g}", repr(float(fraction)))
                        for g, fraction in zip(grid, fractions))
        return rows

    def ranksum_rows(self, alg_a: str, alg_b: str) -> List[Tuple]:
        """
        Raises:
            ValueError: algoritmo ausente en los ensayos o iguales
        """
        for name in (alg_a, alg_b):
            if name not in self.algorithms:
                raise ValueError(f"algoritmo {name!r} sin ensayos; disponibles: {', '.join(self.algorithms)}")
        if alg_a == alg_b:
            raise ValueError("el test de suma de rangos necesita dos algoritmos distintos")
        groups = self._by_key()
        keys = sorted({(fn, dim) for fn, dim, _ in groups})
        rows = []
        for fn, dim in keys:
            logs_a = groups.get((fn, dim, alg_a))
            logs_b = groups.get((fn, dim, alg_b))
            if not logs_a or not logs_b:
                continue
            for precision in self.targets:
                sample_a, sample_b = build_comparison_samples(logs_a, logs_b, precision)
                result = rank_sum_test(sample_a, sample_b)
                rows.append((logs_a[0].function_id, dim, repr(precision), alg_a, alg_b,
                             repr(result.u_statistic), repr(result.p_value)))
        return rows

    def scaling_rows(self) -> List[Tuple]:
        rows = []
        groups = self._by_key()
        for fn, dim, alg in sorted(groups, key=lambda k: (k[0], k[2], k[1])):
            logs = groups[(fn, dim, alg)]
            for precision in self.targets:
                result = compute_ert(logs, precision)
                rows.append((logs[0].function_id, alg, dim, repr(precision),
                             _fmt(result.per_dimension(dim))))
        return rows

    def write(self, mode: str, path: str, group_by: str = "algorithm",
              alg_a: Optional[str] = None, alg_b: Optional[str] = None) -> int:
        """
        Escribe el CSV del modo pedido ('ert', 'ecdf', 'ranksum' o 'scaling').

        Returns:
            Cantidad de filas escritas
        """
        if mode == "ert":
            return _write_rows(path, ERT_HEADER, self.ert_rows())
        if mode == "ecdf":
            return _write_rows(path, ECDF_HEADER, self.ecdf_rows(group_by))
        if mode == "ranksum":
            return _write_rows(path, RANKSUM_HEADER, self.ranksum_rows(alg_a, alg_b))
        if mode == "scaling":
            return _write_rows(path, SCALING_HEADER, self.scaling_rows())
        raise ValueError(f"modo de análisis desconocido: {mode!r}")

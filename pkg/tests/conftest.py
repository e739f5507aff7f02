"""
Fixtures compartidas: problemas unidimensionales de juguete, un recorder
que verifica factibilidad y utilidades para fabricar ensayos sintéticos.
"""

from typing import Callable, Dict, Sequence, Tuple

import numpy as np
import pytest

from src.interfaces.ILogger import ILogger
from src.models.trial_log import TrialLog
from src.problems.recorder import EvaluationRecorder


class LineProblem:
    """Problema mínimo compatible con los optimizadores: f(x) arbitraria en una caja."""

    def __init__(self, f: Callable[[np.ndarray], float], dimension: int = 1,
                 lower: float = -5.0, upper: float = 5.0):
        self.f = f
        self.dimension = dimension
        self.lower_bounds = np.full(dimension, lower)
        self.upper_bounds = np.full(dimension, upper)
        self.f_opt = 0.0
        self.x_opt = np.zeros(dimension)
        self.evaluated = []

    @property
    def ranges(self) -> np.ndarray:
        return self.upper_bounds - self.lower_bounds

    def evaluate(self, x, recorder) -> float:
        x = np.asarray(x, dtype=float)
        self.evaluated.append(x.copy())
        value = float(self.f(x))
        recorder.record(value, x)
        return value


class CheckingRecorder(EvaluationRecorder):
    """Recorder que falla si recibe un punto fuera de la caja."""

    def __init__(self, problem, targets=(), f_reference: float = 0.0):
        super().__init__(targets, f_reference)
        self.problem = problem

    def record(self, value, x=None):
        if x is not None:
            x = np.asarray(x, dtype=float)
            assert np.all(x >= self.problem.lower_bounds), x
            assert np.all(x <= self.problem.upper_bounds), x
        super().record(value, x)


def make_log(events: Sequence[Tuple[int, float]], total_evals: int,
             algorithm_id: str = "HJ-5", function_id: str = "f1", dimension: int = 2,
             instance_id: int = 1, budget: int = 10_000,
             targets_hit: Dict[float, int] = None) -> TrialLog:
    "TrialLog sintético con eventos dados."
    return TrialLog(algorithm_id=algorithm_id, function_id=function_id, dimension=dimension,
                    instance_id=instance_id, seed=7, budget=budget, events=tuple(events),
                    total_evals=total_evals, targets_hit=targets_hit or {},
                    best_x_distance=0.5)


@pytest.fixture
def line_problem():
    "Fábrica de LineProblem."
    return LineProblem


@pytest.fixture
def checking_recorder():
    "Fábrica de CheckingRecorder."
    return CheckingRecorder


def fixture_logs():
    "Dos algoritmos sobre f1 y f3 en D=2 con aciertos conocidos."
    logs = []
    for function_id in ("f1", "f3"):
        logs.append(make_log([(1, 50.0), (100, 1e-9)], 100, function_id=function_id,
                             instance_id=1))
        logs.append(make_log([(1, 50.0), (200, 1e-9)], 200, function_id=function_id,
                             instance_id=2))
        logs.append(make_log([(1, 50.0), (600, 0.5)], 1000, function_id=function_id,
                             instance_id=3))
        for instance_id in (1, 2, 3):
            logs.append(make_log([(1, 80.0), (5000, 0.01)], 10_000, algorithm_id="BSrr",
                                 function_id=function_id, instance_id=instance_id))
    return logs


@pytest.fixture
def log_dir(tmp_path):
    "Directorio con los ensayos sintéticos y su manifiesto."
    # import diferido: evita cargar los controladores en los tests de bajo nivel
    from src.controllers.suite_controller import SuiteController  # pylint: disable=import-outside-toplevel
    from src.models.config_model import ConfigModel  # pylint: disable=import-outside-toplevel

    output = tmp_path / "logs"
    output.mkdir()
    config = ConfigModel().load_config({"output": str(output), "jobs": "1"})
    SuiteController(config).write_logs(sorted(fixture_logs(), key=lambda log: log.sort_key))
    return output


class RecordingLogger(ILogger):
    "Logger que acumula (nivel, mensaje) en memoria."

    def __init__(self):
        self.records = []
        self.verbose = False

    def _add(self, level, msg):
        self.records.append((level, msg))

    def debug(self, msg, *args, **kwargs):
        self._add("debug", msg)

    def info(self, msg, *args, **kwargs):
        self._add("info", msg)

    def warning(self, msg, *args, **kwargs):
        self._add("warning", msg)

    def error(self, msg, *args, **kwargs):
        self._add("error", msg)

    def exception(self, msg, *args, **kwargs):
        self._add("exception", msg)

    def set_verbose(self, verbose):
        self.verbose = verbose

    def is_debug(self):
        return self.verbose

    def messages(self, level):
        return [msg for lvl, msg in self.records if lvl == level]


@pytest.fixture
def recording_logger():
    return RecordingLogger()

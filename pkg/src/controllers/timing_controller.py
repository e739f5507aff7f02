"""
Path: src/controllers/timing_controller.py
Protocolo de tiempos de CPU: cada optimizador corre sin reinicios durante
exactamente 2D evaluaciones por problema; se informa el tiempo por evaluación.
"""

import time
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

from src.config.constants import TIMING_DIMENSIONS, TIMING_UNIT
from src.optimizers.bounds import RestartPolicy
from src.optimizers.optimizer_factory import BUILTIN_VARIANTS, OptimizerFactory, OptimizerVariant
from src.problems.functions import FunctionId
from src.problems.instances import make_problem
from src.utils.simple_logger import LoggerService

logger = LoggerService()


@dataclass
class TimingResult:
    """
    Tiempos de una variante.

    seconds_per_eval[D] es None cuando esa dimensión no registró evaluaciones.
    """
    algorithm_id: str
    seconds_per_eval: Dict[int, Optional[float]] = field(default_factory=dict)
    evaluations: Dict[int, int] = field(default_factory=dict)

    def in_units(self, dimension: int, unit: float = TIMING_UNIT) -> Optional[float]:
        "Tiempo por evaluación en la unidad indicada (10⁻⁵ s por defecto)."
        value = self.seconds_per_eval.get(dimension)
        return None if value is None else value / unit


def timing_experiment(variants: Sequence[OptimizerVariant],
                      functions: Sequence[FunctionId] = tuple(FunctionId),
                      dimensions: Sequence[int] = TIMING_DIMENSIONS,
                      repetitions: int = 1, instance_id: int = 1,
                      seed: int = 1) -> List[TimingResult]:
    """
    Mide segundos por evaluación para cada variante y dimensión.

    La construcción de las instancias queda fuera de la medición.

    Raises:
        ValueError: conjunto de problemas vacío o repetitions < 1
    """
    if not functions or not dimensions:
        raise ValueError("timing_experiment: el conjunto de problemas no puede estar vacío")
    if repetitions < 1:
        raise ValueError(f"repetitions debe ser >= 1, recibido {repetitions}")
    problems = {dimension: [make_problem(fid, dimension, instance_id) for fid in functions]
                for dimension in dimensions}
    no_restart = RestartPolicy.disabled()

    results = []
    for variant in variants:
        result = TimingResult(variant.name)
        for dimension in dimensions:
            elapsed = 0.0
            evaluations = 0
            for _ in range(repetitions):
                for problem in problems[dimension]:
                    start = time.perf_counter()
                    log = variant.run(problem, 2 * dimension, seed, restart=no_restart,
                                      stop_at_target=False)
                    elapsed += time.perf_counter() - start
                    evaluations += log.total_evals
            result.evaluations[dimension] = evaluations
            result.seconds_per_eval[dimension] = elapsed / evaluations if evaluations else None
            logger.debug(f"Tiempo {variant.name} D={dimension}: {evaluations} evaluaciones, "
                         f"{elapsed:.4f} s")
        results.append(result)
    return results


class TimingController:
    """Ejecuta el protocolo de tiempos para las variantes pedidas."""

    def __init__(self, algorithm_names: Optional[Sequence[str]] = None,
                 dimensions: Sequence[int] = TIMING_DIMENSIONS, repetitions: int = 1,
                 seed: int = 1):
        names = algorithm_names or BUILTIN_VARIANTS
        self.variants = [OptimizerFactory.create_optimizer(name) for name in names]
        self.dimensions = tuple(dimensions)
        self.repetitions = repetitions
        self.seed = seed

    def run(self) -> List[TimingResult]:
        logger.info(f"Protocolo de tiempos: {len(self.variants)} optimizadores, "
                    f"dimensiones {list(self.dimensions)}")
        return timing_experiment(self.variants, dimensions=self.dimensions,
                                 repetitions=self.repetitions, seed=self.seed)

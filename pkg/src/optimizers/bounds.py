"""
Path: src/optimizers/bounds.py
Manejo de la caja de búsqueda, puntos iniciales y política de reinicio.
"""

from dataclasses import dataclass
from enum import Enum

import numpy as np

from src.config.constants import BSRR_INIT_LOWER, BSRR_INIT_UPPER, HJ_STALL_THRESHOLD


class Algorithm(Enum):
    """Familias de optimizadores disponibles."""
    HJ = "HJ"
    MTSLS1 = "MTSLS1"
    BSRR = "BSRR"


class ReinitRule(Enum):
    """Cómo se elige el nuevo punto de partida al reiniciar."""
    CENTER = "center"
    UNIFORM_RANDOM = "uniform_random"


@dataclass(frozen=True)
class RestartPolicy:
    """
    Reinicio de HJ cuando σ·(upper_1 - lower_1) cae por debajo del umbral.

    Raises:
        ValueError: si el umbral no es positivo
    """
    enabled: bool = True
    stall_sigma_threshold: float = HJ_STALL_THRESHOLD
    reinit_rule: ReinitRule = ReinitRule.UNIFORM_RANDOM

    def __post_init__(self):
        if not self.stall_sigma_threshold > 0:
            raise ValueError(
                f"stall_sigma_threshold debe ser positivo, recibido {self.stall_sigma_threshold}"
            )

    @classmethod
    def disabled(cls) -> "RestartPolicy":
        "Política sin reinicios (protocolo de tiempos)."
        return cls(enabled=False)


def clamp_to_bounds(x, problem) -> np.ndarray:
    """
    Proyecta cada componente en [lower_i, upper_i] (reemplazo por la cota más cercana).

    Un punto factible se devuelve sin cambios.
    """
    x = np.asarray(x, dtype=float)
    if x.shape != (problem.dimension,):
        raise ValueError(
            f"dimensión de x incorrecta: {x.shape}, se esperaba ({problem.dimension},)"
        )
    return np.minimum(np.maximum(x, problem.lower_bounds), problem.upper_bounds)


def clamp_coordinate(value: float, index: int, problem) -> float:
    "Versión escalar de clamp_to_bounds para una sola coordenada."
    return min(max(value, problem.lower_bounds[index]), problem.upper_bounds[index])


def initialize(algorithm: Algorithm, problem, rng_seed: int) -> np.ndarray:
    """
    Punto inicial de un ensayo.

    HJ y MTS-LS1 parten del centro de la caja (el origen en [-5, 5]^D);
    BSrr toma un punto uniforme en [-1, 3]^D con la semilla dada.
    """
    if algorithm is Algorithm.BSRR:
        rng = np.random.default_rng(rng_seed)
        return rng.uniform(BSRR_INIT_LOWER, BSRR_INIT_UPPER, size=problem.dimension)
    return 0.5 * (problem.lower_bounds + problem.upper_bounds)


def reinitialize(rule: ReinitRule, problem, rng: np.random.Generator) -> np.ndarray:
    "Nuevo punto de partida para un reinicio."
    if rule is ReinitRule.CENTER:
        return 0.5 * (problem.lower_bounds + problem.upper_bounds)
    return rng.uniform(problem.lower_bounds, problem.upper_bounds)


def should_stop(recorder, budget: int) -> bool:
    "True si se agotó el presupuesto o se alcanzó el objetivo más exigente."
    return not recorder.budget_left(budget) or recorder.final_target_hit

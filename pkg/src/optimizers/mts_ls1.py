"""
Path: src/optimizers/mts_ls1.py
Búsqueda local MTS-LS1: paso negativo completo, medio paso positivo y
reinicialización del paso cuando se vuelve despreciable.
"""

from dataclasses import dataclass, replace

import numpy as np

from src.config.constants import (
    LEARNING_RATE_DEFAULT,
    MTS_PLUS_FACTOR,
    SIGMA_INIT,
    SIGMA_REINIT_THRESHOLD,
)
from src.optimizers.bounds import clamp_coordinate, should_stop


@dataclass(frozen=True)
class MtsLs1State:
    """Estado completo de una ejecución de MTS-LS1 (x factible, f(x) cacheado)."""
    x: np.ndarray
    f_x: float
    sigma: float = SIGMA_INIT
    sigma_init: float = SIGMA_INIT
    c: float = LEARNING_RATE_DEFAULT
    reinit_threshold: float = SIGMA_REINIT_THRESHOLD
    plus_factor: float = MTS_PLUS_FACTOR

    def __post_init__(self):
        if not 0.0 < self.c < 1.0:
            raise ValueError(f"c debe estar en (0, 1), recibido {self.c}")
        if not self.sigma > 0.0:
            raise ValueError(f"sigma debe ser positivo, recibido {self.sigma}")


def mts_ls1_sweep(state: MtsLs1State, problem, recorder, budget: int) -> MtsLs1State:
    """
    Ejecuta una iteración externa de MTS-LS1.

    Por coordenada: x_i - σ·rango_i y, si no mejora estrictamente,
    x_i + plus_factor·σ·rango_i. Si ninguna coordenada mejoró
    (f(x) == f(x_prev) sobre valores cacheados), σ ← c·σ y, si
    σ·(upper_1 - lower_1) < reinit_threshold, σ ← sigma_init.
    """
    x = np.array(state.x, dtype=float)
    f_x = state.f_x
    f_prev = f_x
    steps = state.sigma * problem.ranges
    factors = (-1.0, state.plus_factor)

    for i in range(problem.dimension):
        for factor in factors:
            if should_stop(recorder, budget):
                return replace(state, x=x, f_x=f_x)
            candidate = x.copy()
            candidate[i] = clamp_coordinate(x[i] + factor * steps[i], i, problem)
            f_new = problem.evaluate(candidate, recorder)
            if f_new < f_x:
                x, f_x = candidate, f_new
                break

    sigma = state.sigma
    if f_x == f_prev:
        sigma = state.c * sigma
        if sigma * problem.ranges[0] < state.reinit_threshold:
            sigma = state.sigma_init
    return replace(state, x=x, f_x=f_x, sigma=sigma)

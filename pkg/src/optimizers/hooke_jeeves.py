"""
Path: src/optimizers/hooke_jeeves.py
Método de Hooke-Jeeves como máquina de estados reanudable, un barrido por llamada.
"""

from dataclasses import dataclass, replace

import numpy as np

from src.config.constants import LEARNING_RATE_DEFAULT, SIGMA_INIT, SIGMA_REINIT_THRESHOLD
from src.optimizers.bounds import clamp_coordinate, clamp_to_bounds, should_stop


@dataclass(frozen=True)
class HjState:
    """
    Estado completo de una ejecución de HJ.

    Attributes:
        x: Punto actual (siempre factible)
        f_x: Valor cacheado de f(x); nunca se reevalúa
        sigma: Paso actual, sigma_init * c^k
        sigma_init: Paso inicial
        c: Tasa de aprendizaje en (0, 1)
        reinit_sigma: Si es True, σ vuelve a sigma_init cuando
            σ·(upper_1 - lower_1) < reinit_threshold (variante HJR)
        reinit_threshold: Umbral de la variante anterior
    """
    x: np.ndarray
    f_x: float
    sigma: float = SIGMA_INIT
    sigma_init: float = SIGMA_INIT
    c: float = LEARNING_RATE_DEFAULT
    reinit_sigma: bool = False
    reinit_threshold: float = SIGMA_REINIT_THRESHOLD

    def __post_init__(self):
        if not 0.0 < self.c < 1.0:
            raise ValueError(f"c debe estar en (0, 1), recibido {self.c}")
        if not 0.0 < self.sigma_init:
            raise ValueError(f"sigma_init debe ser positivo, recibido {self.sigma_init}")


def hj_sweep(state: HjState, problem, recorder, budget: int) -> HjState:
    """
    Ejecuta una iteración externa de HJ.

    Para cada coordenada prueba x_i + σ·rango_i y, si no mejora estrictamente,
    x_i - σ·rango_i. Tras el barrido, si f(x) < f(x_prev) evalúa el punto
    x + (x - x_prev) (recortado a la caja); si no hubo mejora, σ ← c·σ.

    Se detiene a mitad del barrido en cuanto se agota el presupuesto (o se
    alcanza el objetivo más exigente) y devuelve el estado actual.

    Returns:
        Nuevo HjState; el estado recibido no se modifica
    """
    x = np.array(state.x, dtype=float)
    f_x = state.f_x
    x_prev = x.copy()
    f_prev = f_x
    steps = state.sigma * problem.ranges

    for i in range(problem.dimension):
        for direction in (1.0, -1.0):
            if should_stop(recorder, budget):
                return replace(state, x=x, f_x=f_x)
            candidate = x.copy()
            candidate[i] = clamp_coordinate(x[i] + direction * steps[i], i, problem)
            f_new = problem.evaluate(candidate, recorder)
            if f_new < f_x:
                x, f_x = candidate, f_new
                break

    sigma = state.sigma
    if f_x < f_prev:
        if should_stop(recorder, budget):
            return replace(state, x=x, f_x=f_x)
        candidate = clamp_to_bounds(x + (x - x_prev), problem)
        f_new = problem.evaluate(candidate, recorder)
        if f_new < f_x:
            x, f_x = candidate, f_new
    else:
        sigma = state.c * sigma
        if state.reinit_sigma and sigma * problem.ranges[0] < state.reinit_threshold:
            sigma = state.sigma_init

    return replace(state, x=x, f_x=f_x, sigma=sigma)


def hj_stalled(state: HjState, problem, threshold: float) -> bool:
    "True si σ·(upper_1 - lower_1) cayó por debajo de `threshold`."
    return state.sigma * problem.ranges[0] < threshold

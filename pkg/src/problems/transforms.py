"""
Path: src/problems/transforms.py
Transformaciones de espacio de búsqueda usadas por las funciones de prueba:
oscilación (T_osz), asimetría (T_asy), escalado diagonal (Λ^α) y la
penalización de frontera.
"""

from functools import lru_cache

import numpy as np


@lru_cache(maxsize=64)
def index_fractions(dimension: int) -> np.ndarray:
    """
    Fracciones (i-1)/(D-1) para i = 1..D, de solo lectura.
    Para D = 1 la fracción se define como 0.
    """
    if dimension == 1:
        fractions = np.zeros(1)
    else:
        fractions = np.arange(dimension, dtype=float) / (dimension - 1)
    fractions.setflags(write=False)
    return fractions


def t_osz(v) -> np.ndarray:
    """
    Transformación de oscilación, componente a componente.

    sign(v) * exp(v̂ + 0.049 (sin(c1 v̂) + sin(c2 v̂))), con v̂ = log|v|
    (0 si v = 0), c1 = 10 / 5.5 y c2 = 7.9 / 3.1 para v positivo / negativo.
    Conserva el signo y es monótona.
    """
    v = np.asarray(v, dtype=float)
    out = np.zeros_like(v)
    nonzero = v != 0.0
    if not np.any(nonzero):
        return out
    vals = v[nonzero]
    v_hat = np.log(np.abs(vals))
    positive = vals > 0.0
    c1 = np.where(positive, 10.0, 5.5)
    c2 = np.where(positive, 7.9, 3.1)
    out[nonzero] = np.sign(vals) * np.exp(
        v_hat + 0.049 * (np.sin(c1 * v_hat) + np.sin(c2 * v_hat))
    )
    return out


def t_asy(v, beta: float) -> np.ndarray:
    """
    Transformación de asimetría: v_i^(1 + beta (i-1)/(D-1) sqrt(v_i)) para
    v_i > 0, identidad en el resto.
    """
    v = np.asarray(v, dtype=float)
    out = v.copy()
    positive = v > 0.0
    if np.any(positive):
        fractions = index_fractions(v.shape[0])
        vals = v[positive]
        out[positive] = vals ** (1.0 + beta * fractions[positive] * np.sqrt(vals))
    return out


def lambda_alpha(v, alpha: float) -> np.ndarray:
    """
    Escalado diagonal Λ^α: el componente i se multiplica por alpha^(0.5 (i-1)/(D-1)).

    Raises:
        ValueError: si alpha no es positivo
    """
    if alpha <= 0:
        raise ValueError(f"alpha debe ser positivo, recibido {alpha}")
    v = np.asarray(v, dtype=float)
    return v * alpha ** (0.5 * index_fractions(v.shape[0]))


def boundary_penalty(x: np.ndarray, bound: float = 5.0) -> float:
    "Suma de cuadrados del exceso sobre |x_i| = bound."
    outside = np.maximum(0.0, np.abs(x) - bound)
    return float(np.sum(outside * outside))

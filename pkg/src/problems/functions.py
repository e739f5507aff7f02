"""
Path: src/problems/functions.py
Definición de las funciones de prueba escalables f1-f6, f8 y f10.

Cada función recibe el problema (con sus transformaciones de instancia ya
construidas) y el punto x, y devuelve el valor sin el desplazamiento f_opt.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Dict, Union

import numpy as np

from src.problems.transforms import (
    boundary_penalty,
    index_fractions,
    lambda_alpha,
    t_asy,
    t_osz,
)


class FunctionId(Enum):
    """Identificadores de las funciones disponibles (numeración del conjunto BBOB)."""
    F1 = 1
    F2 = 2
    F3 = 3
    F4 = 4
    F5 = 5
    F6 = 6
    F8 = 8
    F10 = 10

    @property
    def label(self) -> str:
        "Etiqueta corta, p. ej. 'f3'."
        return f"f{self.value}"

    @classmethod
    def parse(cls, value: Union["FunctionId", str, int]) -> "FunctionId":
        """
        Convierte 'f3', 'F3', '3' o 3 en FunctionId.

        Raises:
            ValueError: si el identificador no corresponde a ninguna función
        """
        if isinstance(value, cls):
            return value
        text = str(value).strip().lower()
        if text.startswith("f"):
            text = text[1:]
        try:
            return cls(int(text))
        except ValueError as e:
            raise ValueError(f"función desconocida: {value!r}") from e


@dataclass(frozen=True)
class FunctionInfo:
    """Metadatos descriptivos de una función de prueba."""
    name: str
    description: str
    group: str
    separable: bool
    rotated: bool
    conditioning: float
    asymmetry_beta: float


def _sphere(problem, x: np.ndarray) -> float:
    z = x - problem.x_opt
    return float(np.dot(z, z))


def _separable_ellipsoid(problem, x: np.ndarray) -> float:
    z = t_osz(x - problem.x_opt)
    weights = problem.conditioning ** index_fractions(problem.dimension)
    return float(np.dot(weights, z * z))


def _rastrigin_core(z: np.ndarray) -> float:
    return float(10.0 * (z.shape[0] - np.sum(np.cos(2.0 * np.pi * z))) + np.dot(z, z))


def _separable_rastrigin(problem, x: np.ndarray) -> float:
    z = t_asy(t_osz(x - problem.x_opt), problem.asymmetry_beta)
    z = lambda_alpha(z, problem.conditioning)
    return _rastrigin_core(z)


def _buche_rastrigin(problem, x: np.ndarray) -> float:
    z = t_osz(x - problem.x_opt)
    scales = problem.conditioning ** (0.5 * index_fractions(problem.dimension))
    # posiciones impares (1, 3, 5, ...) con z positivo se escalan por 10
    skewed = np.zeros(problem.dimension, dtype=bool)
    skewed[0::2] = True
    skewed &= z > 0.0
    scales = np.where(skewed, 10.0 * scales, scales)
    return _rastrigin_core(scales * z) + 100.0 * boundary_penalty(x)


def _linear_slope(problem, x: np.ndarray) -> float:
    slopes = np.sign(problem.x_opt) * problem.conditioning ** (
        0.5 * index_fractions(problem.dimension)
    )
    z = np.where(problem.x_opt * x < 25.0, x, problem.x_opt)
    return float(np.sum(5.0 * np.abs(slopes) - slopes * z))


def _attractive_sector(problem, x: np.ndarray) -> float:
    z = problem.rotation @ (x - problem.x_opt)
    z = problem.rotation_q @ lambda_alpha(z, problem.conditioning)
    s = np.where(z * problem.x_opt > 0.0, 100.0, 1.0)
    total = float(np.sum((s * z) ** 2))
    return float(t_osz(np.array([total]))[0] ** 0.9)


def _rosenbrock(problem, x: np.ndarray) -> float:
    scale = max(1.0, np.sqrt(problem.dimension) / 8.0)
    z = scale * (x - problem.x_opt) + 1.0
    head, tail = z[:-1], z[1:]
    return float(np.sum(100.0 * (head * head - tail) ** 2 + (head - 1.0) ** 2))


def _rotated_ellipsoid(problem, x: np.ndarray) -> float:
    z = t_osz(problem.rotation @ (x - problem.x_opt))
    weights = problem.conditioning ** index_fractions(problem.dimension)
    return float(np.dot(weights, z * z))


FUNCTION_INFO: Dict[FunctionId, FunctionInfo] = {
    FunctionId.F1: FunctionInfo("sphere", "Esfera", "separable", True, False, 1.0, 0.0),
    FunctionId.F2: FunctionInfo(
        "separable ellipsoid", "Elipsoide separable con T_osz, condición 1e6",
        "separable", True, False, 1e6, 0.0),
    FunctionId.F3: FunctionInfo(
        "separable Rastrigin", "Rastrigin separable con T_osz, T_asy^0.2 y Λ^10",
        "separable", True, False, 10.0, 0.2),
    FunctionId.F4: FunctionInfo(
        "Buche-Rastrigin", "Rastrigin asimétrico de Büche con penalización de frontera",
        "separable", True, False, 10.0, 0.0),
    FunctionId.F5: FunctionInfo(
        "linear slope", "Pendiente lineal con óptimo en un vértice de la caja",
        "separable", True, False, 100.0, 0.0),
    FunctionId.F6: FunctionInfo(
        "attractive sector", "Sector atractivo rotado, altamente asimétrico",
        "moderate", False, True, 10.0, 0.0),
    FunctionId.F8: FunctionInfo(
        "Rosenbrock", "Rosenbrock original desplazado",
        "moderate", False, False, 1.0, 0.0),
    FunctionId.F10: FunctionInfo(
        "rotated ellipsoid", "Elipsoide rotado con T_osz, condición 1e6",
        "ill-conditioned", False, True, 1e6, 0.0),
}

RAW_FUNCTIONS: Dict[FunctionId, Callable] = {
    FunctionId.F1: _sphere,
    FunctionId.F2: _separable_ellipsoid,
    FunctionId.F3: _separable_rastrigin,
    FunctionId.F4: _buche_rastrigin,
    FunctionId.F5: _linear_slope,
    FunctionId.F6: _attractive_sector,
    FunctionId.F8: _rosenbrock,
    FunctionId.F10: _rotated_ellipsoid,
}

FUNCTION_GROUPS = ("separable", "moderate", "ill-conditioned")


def functions_in_group(group: str):
    """Funciones de un grupo; 'all' devuelve todas."""
    if group == "all":
        return list(FunctionId)
    if group not in FUNCTION_GROUPS:
        raise ValueError(f"grupo de funciones desconocido: {group!r}")
    return [fid for fid, info in FUNCTION_INFO.items() if info.group == group]

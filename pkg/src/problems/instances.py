"""
Path: src/problems/instances.py
Generación determinista de instancias: óptimo desplazado, f_opt y rotaciones.

Todos los valores salen de un único flujo SplitMix64 sembrado con
(función, dimensión, instancia), en este orden: x_opt (D uniformes),
f_opt (1 uniforme) y luego las rotaciones (D*D normales cada una).
"""

from typing import Optional, Union

import numpy as np

from src.config.constants import (
    FOPT_DECIMALS,
    FOPT_RANGE,
    LOWER_BOUND,
    UPPER_BOUND,
    XOPT_RANGE,
    XOPT_RANGE_ROSENBROCK,
)
from src.problems.functions import FUNCTION_INFO, FunctionId
from src.problems.problem import Problem
from src.utils.seeding import SplitMix64, derive_seed
from src.utils.simple_logger import LoggerService

logger = LoggerService()


def orthogonal_matrix(rng: SplitMix64, dimension: int) -> np.ndarray:
    """
    Matriz ortogonal D x D por Gram-Schmidt sobre columnas gaussianas.

    Se hace una segunda pasada de ortogonalización por columna para que
    RᵀR = I se mantenga por debajo de 1e-10 también en dimensiones altas.
    """
    columns = np.array(rng.gaussians(dimension * dimension)).reshape(dimension, dimension).T
    basis = np.empty((dimension, dimension))
    for j in range(dimension):
        v = columns[:, j].copy()
        for _ in range(2):
            if j > 0:
                previous = basis[:, :j]
                v -= previous @ (previous.T @ v)
        basis[:, j] = v / np.linalg.norm(v)
    return basis


def _draw_x_opt(rng: SplitMix64, function_id: FunctionId, dimension: int) -> np.ndarray:
    draws = np.array(rng.uniforms(dimension, -XOPT_RANGE, XOPT_RANGE))
    if function_id is FunctionId.F5:
        return np.where(draws < 0.0, -UPPER_BOUND, UPPER_BOUND)
    if function_id is FunctionId.F8:
        return draws * (XOPT_RANGE_ROSENBROCK / XOPT_RANGE)
    if function_id is FunctionId.F4:
        draws[0::2] = np.abs(draws[0::2])
    return draws


def make_problem(function_id: Union[FunctionId, str, int],
                 dimension: int,
                 instance_id: int) -> Problem:
    """
    Construye la instancia (function_id, dimension, instance_id).

    Args:
        function_id: Identificador de la función ('f3', 3 o FunctionId.F3)
        dimension: Dimensión D >= 1
        instance_id: Índice de instancia >= 1

    Returns:
        Problem determinista: llamadas repetidas producen valores idénticos bit a bit

    Raises:
        ValueError: función desconocida, dimensión o instancia no positivas
    """
    fid = FunctionId.parse(function_id)
    if isinstance(dimension, bool) or int(dimension) != dimension or dimension < 1:
        raise ValueError(f"dimension debe ser un entero >= 1, recibido {dimension!r}")
    if isinstance(instance_id, bool) or int(instance_id) != instance_id or instance_id < 1:
        raise ValueError(f"instance_id debe ser un entero >= 1, recibido {instance_id!r}")
    dimension = int(dimension)
    instance_id = int(instance_id)

    rng = SplitMix64(derive_seed(fid.value, dimension, instance_id))
    info = FUNCTION_INFO[fid]

    x_opt = _draw_x_opt(rng, fid, dimension)
    f_opt = round(rng.uniform(-FOPT_RANGE, FOPT_RANGE), FOPT_DECIMALS)

    rotation: Optional[np.ndarray] = None
    rotation_q: Optional[np.ndarray] = None
    if info.rotated:
        rotation = orthogonal_matrix(rng, dimension)
        if fid is FunctionId.F6:
            rotation_q = orthogonal_matrix(rng, dimension)

    logger.debug(f"Instancia creada: {fid.label} D={dimension} instancia={instance_id} f_opt={f_opt}")
    return Problem(
        function_id=fid,
        dimension=dimension,
        instance_id=instance_id,
        lower_bounds=np.full(dimension, LOWER_BOUND),
        upper_bounds=np.full(dimension, UPPER_BOUND),
        x_opt=x_opt,
        f_opt=f_opt,
        rotation=rotation,
        rotation_q=rotation_q,
        asymmetry_beta=info.asymmetry_beta,
        conditioning=info.conditioning,
    )

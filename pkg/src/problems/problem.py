"""
Path: src/problems/problem.py
Instancia concreta de un problema de prueba y su evaluación.
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from src.problems.functions import FUNCTION_INFO, RAW_FUNCTIONS, FunctionId, FunctionInfo
from src.problems.recorder import EvaluationRecorder


@dataclass(frozen=True, eq=False)
class Problem:
    """
    Instancia inmutable de una función de prueba.

    Los arreglos se marcan de solo lectura al construirse, por lo que un
    Problem puede compartirse entre hilos sin copias.
    """
    function_id: FunctionId
    dimension: int
    instance_id: int
    lower_bounds: np.ndarray
    upper_bounds: np.ndarray
    x_opt: np.ndarray
    f_opt: float
    rotation: Optional[np.ndarray]
    rotation_q: Optional[np.ndarray]
    asymmetry_beta: float
    conditioning: float

    def __post_init__(self):
        for name in ("lower_bounds", "upper_bounds", "x_opt", "rotation", "rotation_q"):
            array = getattr(self, name)
            if array is not None:
                array.setflags(write=False)

    @property
    def info(self) -> FunctionInfo:
        "Metadatos de la función subyacente."
        return FUNCTION_INFO[self.function_id]

    @property
    def key(self) -> tuple:
        "(función, dimensión, instancia)."
        return (self.function_id.label, self.dimension, self.instance_id)

    @property
    def ranges(self) -> np.ndarray:
        "Ancho de la caja por coordenada."
        return self.upper_bounds - self.lower_bounds

    def evaluate(self, x, recorder: EvaluationRecorder) -> float:
        "Atajo de evaluate(self, x, recorder) para los optimizadores."
        return evaluate(self, x, recorder)

    def __repr__(self) -> str:
        label, dim, inst = self.key
        return f"Problem({label}, D={dim}, instance={inst}, f_opt={self.f_opt})"


def evaluate(problem: Problem, x, recorder: EvaluationRecorder) -> float:
    """
    Evalúa el objetivo en x y lo registra en el recorder (exactamente una vez).

    Args:
        problem: Instancia del problema
        x: Punto de longitud D
        recorder: Registro de evaluaciones del ensayo

    Returns:
        Valor del objetivo, incluyendo f_opt

    Raises:
        ValueError: si la longitud de x no coincide con la dimensión
    """
    x = np.asarray(x, dtype=float)
    if x.shape != (problem.dimension,):
        raise ValueError(
            f"dimensión de x incorrecta: {x.shape}, se esperaba ({problem.dimension},)"
        )
    value = RAW_FUNCTIONS[problem.function_id](problem, x) + problem.f_opt
    recorder.record(value, x)
    return value

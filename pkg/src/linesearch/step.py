"""
Path: src/linesearch/step.py
STEP ("select the easiest point"): búsqueda univariada global que divide
por la mitad el intervalo con menor dificultad.

La dificultad de [x_l, x_r] es el coeficiente principal de la única parábola
que pasa por (x_l, f_l) y (x_r, f_r) y alcanza f_best - epsilon dentro del
intervalo: ((sqrt(f_l - t) + sqrt(f_r - t)) / (x_r - x_l))² con t = f_best - epsilon.
"""

import bisect
import math
from typing import Callable, List, Optional, Tuple

import numpy as np

from src.config.constants import BRENT_STEP_EPSILON, STEP_MIN_WIDTH
from src.linesearch.brent import check_interval, recording
from src.utils.simple_logger import LoggerService

logger = LoggerService()


def interval_difficulty(x_left: float, f_left: float, x_right: float, f_right: float,
                        f_best: float, epsilon: float) -> float:
    """Dificultad de un intervalo; inf si es más angosto que STEP_MIN_WIDTH."""
    width = x_right - x_left
    if width < STEP_MIN_WIDTH:
        return math.inf
    threshold = f_best - epsilon
    root = math.sqrt(f_left - threshold) + math.sqrt(f_right - threshold)
    return (root / width) ** 2


class StepState:
    """
    Partición ordenada del intervalo de búsqueda con los valores en cada frontera.

    Las posiciones se mantienen estrictamente crecientes; las dificultades se
    recalculan en cada selección, por lo que siempre son coherentes con f_best.
    """

    def __init__(self, epsilon: float = BRENT_STEP_EPSILON):
        if not epsilon > 0:
            raise ValueError(f"epsilon debe ser positivo, recibido {epsilon}")
        self.epsilon = epsilon
        self.positions: List[float] = []
        self.values: List[float] = []
        self.f_best = math.inf
        self.x_best: Optional[float] = None

    def add_point(self, position: float, value: float) -> None:
        "Inserta un punto evaluado; una posición repetida se ignora."
        index = bisect.bisect_left(self.positions, position)
        if index < len(self.positions) and self.positions[index] == position:
            return
        self.positions.insert(index, position)
        self.values.insert(index, value)
        if value < self.f_best:
            self.f_best, self.x_best = value, position

    def difficulties(self) -> np.ndarray:
        "Dificultad de cada intervalo entre posiciones consecutivas."
        if len(self.positions) < 2:
            return np.empty(0)
        x = np.asarray(self.positions)
        f = np.asarray(self.values)
        widths = np.diff(x)
        threshold = self.f_best - self.epsilon
        roots = np.sqrt(f[:-1] - threshold) + np.sqrt(f[1:] - threshold)
        with np.errstate(divide="ignore"):
            result = (roots / widths) ** 2
        result[widths < STEP_MIN_WIDTH] = math.inf
        return result

    def select(self) -> Optional[int]:
        """
        Índice del intervalo más fácil (empates: el de menor extremo izquierdo).

        Returns:
            None si no queda ningún intervalo divisible
        """
        difficulties = self.difficulties()
        if difficulties.size == 0:
            return None
        index = int(np.argmin(difficulties))
        if math.isinf(difficulties[index]):
            return None
        return index

    def split_point(self, index: int) -> float:
        "Punto medio del intervalo `index`."
        return 0.5 * (self.positions[index] + self.positions[index + 1])

    def step(self, objective: Callable[[float], float]) -> Optional[float]:
        """
        Divide el intervalo más fácil (una evaluación).

        Returns:
            Valor evaluado, o None si la partición está agotada
        """
        index = self.select()
        if index is None:
            return None
        midpoint = self.split_point(index)
        value = objective(midpoint)
        self.add_point(midpoint, value)
        return value

    @property
    def exhausted(self) -> bool:
        return self.select() is None


def step_minimize(f1d: Callable[[float], float], interval: Tuple[float, float],
                  epsilon: float, recorder, budget: int) -> Tuple[float, float]:
    """
    Minimiza f1d en el intervalo con STEP, evaluando primero ambos extremos.

    Returns:
        (x*, f*) mejor punto encontrado al agotar el presupuesto o la partición

    Raises:
        ValueError: intervalo inválido o budget < 2
    """
    a, b = check_interval(interval)
    if budget < 2:
        raise ValueError(f"budget debe ser >= 2 (se evalúan ambos extremos), recibido {budget}")
    objective = recording(f1d, recorder)
    state = StepState(epsilon)
    for endpoint in (a, b):
        if not recorder.budget_left(budget):
            break
        state.add_point(endpoint, objective(endpoint))
    while recorder.budget_left(budget) and state.step(objective) is not None:
        pass
    logger.debug(f"STEP terminado en x={state.x_best}, f={state.f_best:.6g}, "
                 f"{len(state.positions)} puntos")
    return state.x_best, state.f_best

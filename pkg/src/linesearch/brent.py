"""
Path: src/linesearch/brent.py
Método de Brent para minimización univariada sin derivadas: interpolación
parabólica a través de (x, w, v) con paso de sección áurea como respaldo.

El estado es reanudable: cada llamada a next_point/tell consume exactamente
una evaluación, lo que permite intercalarlo con otros solvers.
"""

import math
from dataclasses import dataclass
from typing import Callable, Optional, Tuple

from src.config.constants import BRENT_TOL
from src.utils.simple_logger import LoggerService

logger = LoggerService()

GOLDEN = 0.5 * (3.0 - math.sqrt(5.0))


@dataclass
class BrentState:
    """
    Estado de Brent dentro del corchete [a, b].

    Attributes:
        a, b: Extremos del corchete
        x, fx: Mejor punto y su valor
        w, fw: Segundo mejor
        v, fv: Valor previo de w
        tol: Tolerancia absoluta en x
        d, e: Últimos dos pasos, para decidir entre parábola y sección áurea
    """
    a: float
    b: float
    x: float
    fx: float
    tol: float = BRENT_TOL
    w: Optional[float] = None
    fw: Optional[float] = None
    v: Optional[float] = None
    fv: Optional[float] = None
    d: float = 0.0
    e: float = 0.0

    def __post_init__(self):
        if not self.a < self.b:
            raise ValueError(f"intervalo inválido: a={self.a} debe ser menor que b={self.b}")
        if not self.tol > 0:
            raise ValueError(f"tol debe ser positiva, recibido {self.tol}")
        if not self.a <= self.x <= self.b:
            raise ValueError(f"x={self.x} fuera del corchete [{self.a}, {self.b}]")
        if self.w is None:
            self.w, self.fw = self.x, self.fx
        if self.v is None:
            self.v, self.fv = self.x, self.fx

    @property
    def tol1(self) -> float:
        return self.tol

    @property
    def converged(self) -> bool:
        "True cuando el corchete ya es más angosto que la tolerancia alrededor de x."
        midpoint = 0.5 * (self.a + self.b)
        return abs(self.x - midpoint) <= 2.0 * self.tol1 - 0.5 * (self.b - self.a)

    def next_point(self) -> float:
        """Siguiente abscisa a evaluar; actualiza los pasos d y e."""
        x, a, b = self.x, self.a, self.b
        midpoint = 0.5 * (a + b)
        tol1 = self.tol1
        tol2 = 2.0 * tol1

        use_golden = True
        if abs(self.e) > tol1:
            r = (x - self.w) * (self.fx - self.fv)
            q = (x - self.v) * (self.fx - self.fw)
            p = (x - self.v) * q - (x - self.w) * r
            q = 2.0 * (q - r)
            if q > 0.0:
                p = -p
            q = abs(q)
            previous_e = self.e
            self.e = self.d
            if not (abs(p) >= abs(0.5 * q * previous_e) or p <= q * (a - x) or p >= q * (b - x)):
                # paso parabólico
                self.d = p / q
                u = x + self.d
                if u - a < tol2 or b - u < tol2:
                    self.d = tol1 if x < midpoint else -tol1
                use_golden = False
        if use_golden:
            self.e = (a - x) if x >= midpoint else (b - x)
            self.d = GOLDEN * self.e

        if abs(self.d) >= tol1:
            return x + self.d
        return x + (tol1 if self.d > 0.0 else -tol1)

    def tell(self, u: float, fu: float) -> None:
        """Incorpora el valor f(u) y achica el corchete."""
        if fu <= self.fx:
            if u >= self.x:
                self.a = self.x
            else:
                self.b = self.x
            self.v, self.fv = self.w, self.fw
            self.w, self.fw = self.x, self.fx
            self.x, self.fx = u, fu
            return
        if u < self.x:
            self.a = u
        else:
            self.b = u
        if fu <= self.fw or self.w == self.x:
            self.v, self.fv = self.w, self.fw
            self.w, self.fw = u, fu
        elif fu <= self.fv or self.v == self.x or self.v == self.w:
            self.v, self.fv = u, fu

    def step(self, objective: Callable[[float], float]) -> Optional[float]:
        """
        Una iteración completa (una evaluación).

        Returns:
            El valor evaluado, o None si el estado ya convergió
        """
        if self.converged:
            return None
        u = self.next_point()
        fu = objective(u)
        self.tell(u, fu)
        return fu


def recording(f1d: Callable[[float], float], recorder) -> Callable[[float], float]:
    """Envuelve un objetivo univariado para que cada llamada quede registrada."""
    def wrapped(t: float) -> float:
        value = float(f1d(t))
        recorder.record(value, (t,))
        return value
    return wrapped


def check_interval(interval: Tuple[float, float]) -> Tuple[float, float]:
    """
    Raises:
        ValueError: si el intervalo no cumple a < b
    """
    a, b = float(interval[0]), float(interval[1])
    if not a < b:
        logger.error(f"Intervalo inválido: ({a}, {b})")
        raise ValueError(f"intervalo inválido: se requiere a < b, recibido ({a}, {b})")
    return a, b


def brent_minimize(f1d: Callable[[float], float], interval: Tuple[float, float],
                   tol: float, recorder, budget: int,
                   x0: Optional[float] = None) -> Tuple[float, float]:
    """
    Minimiza f1d en el intervalo con el método de Brent.

    Args:
        f1d: Objetivo univariado
        interval: (a, b) con a < b
        tol: Tolerancia en x
        recorder: EvaluationRecorder que cuenta cada evaluación
        budget: Tope de recorder.eval_count
        x0: Punto de arranque (por defecto a + 0.382·(b - a))

    Returns:
        (x*, f*) mejor punto encontrado
    """
    a, b = check_interval(interval)
    if budget < 1:
        raise ValueError(f"budget debe ser >= 1, recibido {budget}")
    objective = recording(f1d, recorder)
    x = a + GOLDEN * (b - a) if x0 is None else float(x0)
    if not recorder.budget_left(budget):
        return x, math.inf
    state = BrentState(a, b, x, objective(x), tol=tol)
    while recorder.budget_left(budget) and state.step(objective) is not None:
        pass
    logger.debug(f"Brent terminado en x={state.x:.10g}, f={state.fx:.6g}, "
                 f"{recorder.eval_count} evaluaciones")
    return state.x, state.fx

import math

import numpy as np
import pytest


def rastrigin_1d(x: float) -> float:
    return x * x + 10.0 * (1.0 - math.cos(2.0 * math.pi * x))


def rastrigin_local_min(start: float) -> float:
    "Mínimo local de rastrigin_1d por Newton desde `start`."
    x = start
    for _ in range(50):
        grad = 2.0 * x + 20.0 * math.pi * math.sin(2.0 * math.pi * x)
        hess = 2.0 + 40.0 * math.pi ** 2 * math.cos(2.0 * math.pi * x)
        x -= grad / hess
    return x


def dense_grid_min(f, a: float, b: float, n: int = 200_001) -> float:
    grid = np.linspace(a, b, n)
    return float(min(f(x) for x in grid))


@pytest.fixture
def rastrigin():
    return rastrigin_1d

import numpy as np
import pytest

from src.linesearch.brent import GOLDEN, BrentState, brent_minimize
from src.problems.recorder import EvaluationRecorder


def test_quadratic_solved_quickly():
    recorder = EvaluationRecorder()
    x, fx = brent_minimize(lambda t: (t - 1.5) ** 2, (0.0, 3.0), 1e-8, recorder, budget=1000)
    assert abs(x - 1.5) <= 1e-7
    assert fx == pytest.approx((x - 1.5) ** 2)
    assert recorder.eval_count <= 30


def test_kink_minimum():
    recorder = EvaluationRecorder()
    x, _ = brent_minimize(lambda t: abs(t - 0.3), (-1.0, 1.0), 1e-10, recorder, budget=500)
    assert abs(x - 0.3) <= 1e-6


def test_random_convex_quartics():
    rng = np.random.default_rng(9)
    for _ in range(50):
        a, b = rng.uniform(0.1, 2.0, size=2)
        root = rng.uniform(-3.0, 3.0)
        recorder = EvaluationRecorder()
        x, _ = brent_minimize(lambda t: a * (t - root) ** 4 + b * (t - root) ** 2,
                              (-5.0, 5.0), 1e-10, recorder, budget=100)
        assert abs(x - root) <= 1e-7
        assert recorder.eval_count <= 100


def test_respects_budget():
    recorder = EvaluationRecorder()
    brent_minimize(lambda t: abs(t - 0.3), (-1.0, 1.0), 1e-12, recorder, budget=7)
    assert recorder.eval_count == 7


def test_default_start_is_golden_point():
    recorder = EvaluationRecorder()
    seen = []

    def f(t):
        seen.append(t)
        return t * t

    brent_minimize(f, (0.0, 1.0), 1e-8, recorder, budget=1)
    assert seen == [pytest.approx(GOLDEN)]


@pytest.mark.parametrize("interval", [(1.0, 1.0), (2.0, -1.0)])
def test_rejects_empty_interval(interval):
    with pytest.raises(ValueError):
        brent_minimize(lambda t: t, interval, 1e-8, EvaluationRecorder(), budget=10)


def test_state_is_resumable():
    f = lambda t: (t - 0.7) ** 2 + 1.0  # noqa: E731
    state = BrentState(0.0, 2.0, 1.0, f(1.0), tol=1e-9)
    evaluations = 0
    while state.step(f) is not None:
        evaluations += 1
        assert state.a <= state.x <= state.b
    assert state.converged
    assert evaluations > 0
    assert state.x == pytest.approx(0.7, abs=1e-7)
    assert state.step(f) is None


def test_state_rejects_start_outside_bracket():
    with pytest.raises(ValueError):
        BrentState(0.0, 1.0, 2.0, 0.0)


def test_tolerance_is_absolute_in_x():
    f = lambda t: (t - 4.0) ** 2  # noqa: E731
    state = BrentState(3.0, 5.0, 3.5, f(3.5), tol=1e-6)
    assert state.tol1 == 1e-6
    while state.step(f) is not None:
        pass
    assert state.b - state.a <= 4e-6 + 1e-12
    assert state.x == pytest.approx(4.0, abs=4e-6)

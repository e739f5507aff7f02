import math

import numpy as np
import pytest

from src.problems.transforms import boundary_penalty, index_fractions, lambda_alpha, t_asy, t_osz


def _t_osz_scalar(v: float) -> float:
    if v == 0.0:
        return 0.0
    v_hat = math.log(abs(v))
    c1, c2 = (10.0, 7.9) if v > 0 else (5.5, 3.1)
    return math.copysign(math.exp(v_hat + 0.049 * (math.sin(c1 * v_hat) + math.sin(c2 * v_hat))), v)


def test_t_osz_fixed_points():
    assert t_osz([0.0])[0] == 0.0
    assert t_osz([1.0])[0] == pytest.approx(1.0, abs=1e-15)


def test_t_osz_matches_scalar_formula():
    rng = np.random.default_rng(3)
    v = rng.normal(scale=3.0, size=50)
    out = t_osz(v)
    for value, expected in zip(out, (_t_osz_scalar(x) for x in v)):
        assert value == pytest.approx(expected, rel=1e-14)


def test_t_osz_preserves_sign_and_order():
    v = np.linspace(-4, 4, 101)
    out = t_osz(v)
    assert np.all(np.sign(out) == np.sign(v))
    assert np.all(np.diff(out) > 0)


def test_t_asy_identity_on_non_positive():
    v = np.array([-3.0, -0.5, 0.0, -1e-3])
    np.testing.assert_array_equal(t_asy(v, 0.2), v)


def test_t_asy_first_component_one():
    v = np.array([1.0, 2.0, 3.0])
    assert t_asy(v, 0.5)[0] == 1.0


def test_t_asy_matches_scalar_formula():
    rng = np.random.default_rng(5)
    v = rng.uniform(0.01, 4.0, size=9)
    beta = 0.2
    out = t_asy(v, beta)
    for i, (value, x) in enumerate(zip(out, v)):
        expected = x ** (1.0 + beta * i / 8 * math.sqrt(x))
        assert value == pytest.approx(expected, rel=1e-14)


def test_t_asy_dimension_one_uses_zero_fraction():
    assert t_asy(np.array([2.0]), 0.2)[0] == 2.0


def test_lambda_alpha_identity_and_two_dimensions():
    v = np.array([3.0, -2.0, 1.0])
    np.testing.assert_array_equal(lambda_alpha(v, 1.0), v)
    np.testing.assert_allclose(lambda_alpha(np.array([1.0, 1.0]), 100.0), [1.0, 10.0])


def test_lambda_alpha_matches_scalar_formula():
    rng = np.random.default_rng(11)
    v = rng.normal(size=6)
    out = lambda_alpha(v, 10.0)
    for i, (value, x) in enumerate(zip(out, v)):
        assert value == pytest.approx(x * 10.0 ** (0.5 * i / 5), rel=1e-14)


def test_lambda_alpha_rejects_non_positive_alpha():
    with pytest.raises(ValueError):
        lambda_alpha(np.ones(3), 0.0)


def test_index_fractions_read_only():
    fractions = index_fractions(4)
    np.testing.assert_allclose(fractions, [0, 1 / 3, 2 / 3, 1])
    with pytest.raises(ValueError):
        fractions[0] = 1.0


def test_boundary_penalty_only_outside():
    assert boundary_penalty(np.array([4.9, -5.0])) == 0.0
    assert boundary_penalty(np.array([6.0, -7.0])) == pytest.approx(1.0 + 4.0)

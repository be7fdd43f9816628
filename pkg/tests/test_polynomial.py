import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from aho_delta import Polynomial

coeffs = st.lists(st.floats(-10, 10), min_size=1, max_size=12)


def test_derivative_example():
    a2, a3 = 0.7, -1.3
    p = Polynomial([0, 0, a2, a3])
    assert p.derivative() == Polynomial([0, 2 * a2, 3 * a3])


def test_evaluate_and_shift():
    assert Polynomial.monomial(3)(2.0) == 8.0
    assert Polynomial.monomial(2).shift(1) == Polynomial.monomial(3)


def test_trailing_zeros_are_trimmed():
    p = Polynomial([1.0, 2.0, 0.0, 0.0])
    assert p.degree == 1
    assert Polynomial([0.0, 0.0]).is_zero()


def test_rejects_non_finite():
    with pytest.raises(ValueError):
        Polynomial([1.0, np.inf])


def test_arithmetic():
    p, q = Polynomial([1, 2]), Polynomial([0, 0, 3])
    assert p + q == Polynomial([1, 2, 3])
    assert q - p == Polynomial([-1, -2, 3])
    assert p * q == Polynomial([0, 0, 3, 6])
    assert 2 * p == Polynomial([2, 4])
    np.testing.assert_allclose(p(np.array([0.0, 1.0, 2.0])), [1, 3, 5])


@given(coeffs, st.floats(-2, 2))
def test_derivative_matches_central_difference(c, x):
    p = Polynomial(c)
    dp = p.derivative()
    errs = []
    for h in (1e-4, 1e-5):
        fd = (p(x + h) - p(x - h)) / (2 * h)
        errs.append(abs(fd - dp(x)))
    scale = 1 + np.sum(np.abs(c)) * 2.0 ** len(c)
    assert max(errs) <= 1e-6 * scale


@given(coeffs, st.integers(0, 6))
def test_degree_rules(c, j):
    p = Polynomial(c)
    if p.is_zero():
        return
    assert p.shift(j).degree == p.degree + j
    if p.degree >= 1:
        assert p.derivative().degree == p.degree - 1


@given(coeffs, st.floats(-3, 3))
def test_horner_matches_numpy(c, x):
    assert Polynomial(c)(x) == pytest.approx(np.polynomial.polynomial.polyval(x, c), rel=1e-12, abs=1e-9)

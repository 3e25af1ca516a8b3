from fractions import Fraction
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from degenbell.errors import DomainError, PrecisionError
from degenbell.rings import LAMBDA, LPoly, X, XPoly
from degenbell.series import (
    TSeries,
    degen_exp,
    exp_series,
    geometric,
    series_arith,
    series_compose,
    series_derivative,
    series_exp,
    series_inverse,
)
from strategies import small_fractions


def lseries(coeffs, order=None):
    return TSeries(coeffs, order, LPoly)


def test_product_truncates():
    f = lseries([1, 1], 4)
    g = lseries([1, -1], 4)
    assert series_arith(f, g, "mul") == lseries([1, 0, -1], 4)
    assert (f * TSeries.zero(4, LPoly)) == TSeries.zero(4, LPoly)


def test_geometric_telescopes():
    ones = lseries([1] * 7, 6)
    assert ones * lseries([1, -1], 6) == TSeries.one(6, LPoly)


def test_order_is_min_of_operands():
    assert (lseries([1, 2, 3], 5) + lseries([1], 2)).order == 2
    assert (lseries([1, 2, 3], 5) * lseries([1], 3)).order == 3


def test_exp_of_variable():
    got = series_exp(TSeries.variable(4, LPoly))
    assert list(got) == [Fraction(1, math.factorial(n)) for n in range(5)]
    assert series_exp(TSeries.zero(3, LPoly)) == TSeries.one(3, LPoly)


def test_exp_of_degenerate_argument():
    # exp(x(t + (1-lambda) t^2/2 + ...)) = 1 + x t + (x(1-lambda)/2 + x^2/2) t^2 + ...
    f = (degen_exp(1, 2) - 1) * X
    got = series_exp(f)
    assert got[0] == XPoly([1])
    assert got[1] == X
    assert got[2] == X * (1 - LAMBDA) * Fraction(1, 2) + X * X * Fraction(1, 2)


def test_exp_domain_error():
    with pytest.raises(DomainError):
        series_exp(lseries([1, 1], 3))


def test_inverse_examples():
    assert list(series_inverse(lseries([1, -1], 5))) == [1] * 6
    assert series_inverse(TSeries.one(4, LPoly)) == TSeries.one(4, LPoly)
    assert list(series_inverse(lseries([1, -2, 1], 3))) == [1, 2, 3, 4]


def test_inverse_of_scaled_unit():
    f = lseries([3, 1], 4)
    assert f * series_inverse(f) == TSeries.one(4, LPoly)


def test_inverse_domain_error():
    with pytest.raises(DomainError):
        series_inverse(lseries([0, 1], 3))
    with pytest.raises(DomainError):
        series_inverse(lseries([LAMBDA + 1, 1], 3))


def test_compose_polynomial_in_geometric_shift():
    xs = geometric(4).shift(1).truncate(4)
    assert list(series_compose(XPoly([0, 0, 1]), xs)) == [0, 0, 1, 2, 3]


def test_compose_with_identity():
    f = lseries([1, LAMBDA, 3, 4], 3)
    assert series_compose(f, TSeries.variable(3, LPoly)) == f


def test_compose_first_fubini():
    # F_1(x|0) = x, so (1/(1-x)) F_1(x/(1-x)) = x/(1-x)^2 = sum n x^n
    geo = geometric(8)
    got = geo * series_compose(XPoly([0, 1]), geo.shift(1).truncate(8))
    assert list(got) == list(range(9))


def test_compose_domain_error():
    with pytest.raises(DomainError):
        series_compose(exp_series(4), lseries([1, 1], 4))


def test_degen_exp_examples():
    assert list(degen_exp(1, 2)) == [1, 1, (1 - LAMBDA) * Fraction(1, 2)]
    assert degen_exp(0, 5) == TSeries.one(5, LPoly)
    at_zero = [c.evaluate(0) for c in degen_exp(2, 3)]
    assert at_zero == [1, 2, 2, Fraction(4, 3)]


def test_degen_exp_symbolic_x():
    e = degen_exp(X, 3)
    assert e.ring is XPoly
    assert e[2] * 2 == X * (X - LAMBDA)


def test_derivative_examples():
    d = series_derivative(lseries([1, 1, 1], 2))
    assert d == lseries([1, 2], 1)
    assert series_derivative(lseries([5], 3)) == TSeries.zero(2, LPoly)
    # d/dt e_lambda(t) = e_lambda^{1-lambda}(t)
    assert series_derivative(degen_exp(1, 3)) == degen_exp(1 - LAMBDA, 2)


def test_derivative_precision_error():
    with pytest.raises(PrecisionError):
        series_derivative(lseries([1], 0))


def test_json_roundtrip():
    s = degen_exp(X + 2, 4)
    assert TSeries.from_json(s.to_json(), XPoly) == s


series_coeffs = st.lists(small_fractions, min_size=11, max_size=11)


@settings(max_examples=50, deadline=None)
@given(series_coeffs)
def test_inverse_of_exp_is_exp_of_negation(cs):
    f = lseries([0] + cs[1:], 10)
    assert series_inverse(series_exp(f)) == series_exp(-f)


@settings(max_examples=50, deadline=None)
@given(series_coeffs, series_coeffs)
def test_product_rule(a, b):
    f, g = lseries(a, 10), lseries(b, 10)
    assert series_derivative(f * g) == series_derivative(f) * g + f * series_derivative(g)


@settings(max_examples=25, deadline=None)
@given(small_fractions, small_fractions)
def test_degen_exp_addition_law(a, b):
    # holds identically in lambda
    assert degen_exp(a, 8) * degen_exp(b, 8) == degen_exp(a + b, 8)


def test_degen_exp_addition_law_symbolic():
    assert degen_exp(X, 6) * degen_exp(LAMBDA + 3, 6) == degen_exp(X + LAMBDA + 3, 6)

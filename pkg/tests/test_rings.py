import json
from fractions import Fraction

import pytest
from hypothesis import given, settings

from degenbell.rings import (
    LAMBDA,
    LPoly,
    X,
    XPoly,
    binomial,
    falling_factorial,
    format_rational,
    parse_rational,
)
from strategies import lpolys, rationals, xpolys


def test_lambda_squared():
    assert LAMBDA * LAMBDA == LPoly([0, 0, 1])


def test_cancellation_to_constant():
    r = 2
    assert (X + r) + (-X) == XPoly([2])
    assert ((X + r) + (-X)).degree == 0


def test_product_expansion():
    assert LPoly([1, -1]) * LPoly([1, -2]) == LPoly([1, -3, 2])


def test_canonical_zero():
    assert LPoly([0, 0, 0]).coeffs == ()
    assert XPoly([LPoly(), 0]).coeffs == ()
    assert LPoly([1, 2, 0]).coeffs == (Fraction(1), Fraction(2))


def test_scalar_mixing():
    assert LAMBDA + 1 == LPoly([1, 1])
    assert 1 - LAMBDA == LPoly([1, -1])
    assert X * LAMBDA == XPoly([0, LAMBDA])
    assert LAMBDA * X == XPoly([0, LAMBDA])
    assert 3 * X == XPoly([0, 3])
    assert LPoly([5]) == 5
    assert hash(LPoly([5])) == hash(5)


def test_eval_examples():
    assert (X * X + X).evaluate(1, 0) == 2
    assert XPoly().evaluate(Fraction(7, 3), Fraction(1, 2)) == 0
    assert (X * (X - LAMBDA)).evaluate(3, 1) == 6


def test_partial_evaluation():
    p = X * (X - LAMBDA)
    assert p.at_lambda(1) == XPoly([0, -1, 1])
    assert p.at_x(3) == LPoly([9, -3])


def test_falling_factorial():
    assert falling_factorial(5, 2) == 20
    assert falling_factorial(3, 5) == 0
    for n in (0, 1, 7):
        assert falling_factorial(n, 0) == 1
    with pytest.raises(ValueError):
        falling_factorial(-1, 2)
    with pytest.raises(ValueError):
        falling_factorial(3, -2)


def test_binomial():
    assert binomial(4, 2) == 6
    assert all(binomial(n, 0) == 1 for n in range(6))
    assert binomial(3, 5) == 0
    assert binomial(3, -1) == 0


def test_power_and_derivative():
    assert (X + 1) ** 3 == XPoly([1, 3, 3, 1])
    assert ((X + 1) ** 3).derivative() == XPoly([3, 6, 3])
    assert LPoly([1, 2, 3]).derivative() == LPoly([2, 6])


def test_rational_strings():
    assert format_rational(Fraction(3, 4)) == "3/4"
    assert format_rational(Fraction(-6, 3)) == "-2"
    assert parse_rational("6/8") == Fraction(3, 4)
    assert parse_rational(" -3 ") == -3
    for bad in ("", "1/0", "abc", "1/x"):
        with pytest.raises(ValueError):
            parse_rational(bad)


def test_pretty():
    assert LPoly([1, -3, 2]).pretty() == "1 - 3λ + 2λ^2"
    assert LPoly([Fraction(1, 2), 0, -1]).pretty() == "1/2 - λ^2"
    assert (X * X + (1 - LAMBDA) * X).pretty() == "x^2 + (1 - λ)x"
    assert XPoly().pretty() == "0"


@given(lpolys())
def test_lpoly_json_roundtrip(p):
    assert LPoly.from_json(json.loads(json.dumps(p.to_json()))) == p


@given(xpolys(4))
def test_xpoly_json_roundtrip(p):
    assert XPoly.from_json(json.loads(json.dumps(p.to_json()))) == p


@given(lpolys(), lpolys(), lpolys())
def test_lpoly_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a - a == LPoly()
    assert (a - a).coeffs == ()


@settings(max_examples=40, deadline=None)
@given(xpolys(), xpolys(), xpolys())
def test_xpoly_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert (a - a).coeffs == ()


@given(lpolys())
def test_normalization_idempotent(a):
    again = LPoly(a.coeffs)
    assert again.coeffs == a.coeffs
    assert LPoly(list(a.coeffs) + [0, 0]).coeffs == a.coeffs


@settings(deadline=None)
@given(xpolys(6), xpolys(6), rationals, rationals)
def test_evaluation_is_homomorphism(a, b, x0, lam0):
    assert (a * b).evaluate(x0, lam0) == a.evaluate(x0, lam0) * b.evaluate(x0, lam0)
    assert (a + b).evaluate(x0, lam0) == a.evaluate(x0, lam0) + b.evaluate(x0, lam0)


@given(lpolys(), lpolys(), rationals)
def test_lpoly_evaluation_is_homomorphism(a, b, lam0):
    assert (a * b)(lam0) == a(lam0) * b(lam0)

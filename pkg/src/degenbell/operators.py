"""Calculus on XPoly and x-series: antiderivative, division by x, the
degenerate Euler operator (x d/dx + r)_{p,lambda} and the scaled m-th
derivative (1/m!) (d/dx)^m x^m."""

from dataclasses import dataclass
from fractions import Fraction
import math

from .errors import DomainError
from .rings import LAMBDA, XPoly
from .series import TSeries, series_derivative


@dataclass(frozen=True)
class OperatorSpec:
    p: int
    r: int

    def __post_init__(self):
        for name in ("p", "r"):
            value = getattr(self, name)
            if not isinstance(value, int) or value < 0:
                raise ValueError(f"{name} must be a non-negative integer, got {value!r}")

    def factors(self):
        """The shifts r - j*lambda, j = 0..p-1, in application order."""
        return [LAMBDA * -j + self.r for j in range(self.p)]


def antiderivative0(f):
    """Integral from 0 to x, termwise x^k -> x^{k+1}/(k+1)."""
    return XPoly([0] + [c * Fraction(1, k + 1) for k, c in enumerate(f.coeffs)])


def div_by_var(f):
    if f[0]:
        raise DomainError("div_by_var needs a zero constant term")
    if isinstance(f, TSeries):
        if f.order < 1:
            raise DomainError("div_by_var needs a series of order >= 1")
        # the coefficient of x^N in f/x would need c_{N+1}
        return TSeries._raw(f.coeffs[1:], f.order - 1, f.ring)
    return type(f)(f.coeffs[1:])


def euler(f):
    """x d/dx, which keeps the trusted order of a series."""
    if isinstance(f, TSeries):
        return TSeries._raw([c * n for n, c in enumerate(f.coeffs)], f.order, f.ring)
    return type(f)(c * n for n, c in enumerate(f.coeffs))


def xddx_r(f, spec):
    """Apply (x d/dx + r)(x d/dx + r - lambda)...(x d/dx + r - (p-1)lambda)."""
    for shift in spec.factors():
        f = euler(f) + f * shift
    return f


def deriv_m_scaled(f, m):
    """(1/m!) (d/dx)^m (x^m f).

    For a series the x^m shift adds m trusted terms and the m derivatives
    consume them, so the result has the input's order.
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    g = f.shift(m)
    for _ in range(m):
        g = series_derivative(g) if isinstance(g, TSeries) else g.derivative()
    return g * Fraction(1, math.factorial(m))

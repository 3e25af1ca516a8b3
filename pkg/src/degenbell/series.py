"""Truncated formal power series over the coefficient tower.

A :class:`TSeries` stores plain coefficients ``c_0..c_N`` (no factorial
scaling) together with the trusted order ``N``.  Every binary operation
returns the minimum of the operand orders; differentiation loses one.
"""

from fractions import Fraction
import math

from .errors import DomainError, PrecisionError
from .rings import LAMBDA, LPoly, XPoly, join_rings, lift, ring_of, to_json, unit_scalar

DEFAULT_ORDER = 12


class TSeries:
    __slots__ = ("coeffs", "order", "ring")

    def __init__(self, coeffs, order=None, ring=None):
        coeffs = list(coeffs)
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("series order must be >= 0")
        if ring is None:
            ring = Fraction
            for c in coeffs:
                ring = join_rings(ring, ring_of(c))
        coeffs = coeffs[: order + 1]
        zero = lift(ring, 0)
        coeffs.extend([zero] * (order + 1 - len(coeffs)))
        self.coeffs = tuple(lift(ring, c) for c in coeffs)
        self.order = order
        self.ring = ring

    @classmethod
    def _raw(cls, coeffs, order, ring):
        obj = object.__new__(cls)
        obj.coeffs = tuple(coeffs)
        obj.order = order
        obj.ring = ring
        return obj

    @classmethod
    def zero(cls, order, ring=Fraction):
        return cls((), order, ring)

    @classmethod
    def one(cls, order, ring=Fraction):
        return cls((1,), order, ring)

    @classmethod
    def variable(cls, order, ring=Fraction):
        return cls((0, 1), order, ring)

    @classmethod
    def from_poly(cls, poly, order):
        """View an ``XPoly`` (or ``LPoly``) as a series in its own variable."""
        ring = LPoly if isinstance(poly, XPoly) else Fraction
        return cls(poly.coeffs, order, ring)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, n):
        return self.coeffs[n]

    def __iter__(self):
        return iter(self.coeffs)

    def __repr__(self):
        return f"TSeries({list(self.coeffs)!r}, order={self.order})"

    def __eq__(self, other):
        if not isinstance(other, TSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def _align(self, other):
        ring = join_rings(self.ring, other.ring)
        order = min(self.order, other.order)
        a = [lift(ring, c) for c in self.coeffs[: order + 1]]
        b = [lift(ring, c) for c in other.coeffs[: order + 1]]
        return a, b, order, ring

    def _as_series(self, other):
        if isinstance(other, TSeries):
            return other
        # a scalar is exact to every order
        return TSeries((other,), self.order, join_rings(self.ring, ring_of(other)))

    def __add__(self, other):
        a, b, order, ring = self._align(self._as_series(other))
        return TSeries._raw([x + y for x, y in zip(a, b)], order, ring)

    __radd__ = __add__

    def __sub__(self, other):
        a, b, order, ring = self._align(self._as_series(other))
        return TSeries._raw([x - y for x, y in zip(a, b)], order, ring)

    def __rsub__(self, other):
        return self._as_series(other) - self

    def __neg__(self):
        return TSeries._raw([-c for c in self.coeffs], self.order, self.ring)

    def __mul__(self, other):
        if not isinstance(other, TSeries):
            ring = join_rings(self.ring, ring_of(other))
            c = lift(ring, other)
            return TSeries._raw([lift(ring, x) * c for x in self.coeffs], self.order, ring)
        a, b, order, ring = self._align(other)
        out = []
        for n in range(order + 1):
            acc = None
            for k in range(n + 1):
                if not a[k] or not b[n - k]:
                    continue
                t = a[k] * b[n - k]
                acc = t if acc is None else acc + t
            out.append(lift(ring, 0) if acc is None else acc)
        return TSeries._raw(out, order, ring)

    __rmul__ = __mul__

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            raise ValueError("only non-negative integer powers are supported")
        result = TSeries.one(self.order, self.ring)
        for _ in range(e):
            result = result * self
        return result

    def truncate(self, order):
        if order > self.order:
            raise PrecisionError(f"cannot raise trusted order {self.order} to {order}")
        return TSeries._raw(self.coeffs[: order + 1], order, self.ring)

    def shift(self, m):
        """Multiply by the variable to the power m (trusted order grows by m)."""
        zero = lift(self.ring, 0)
        return TSeries._raw((zero,) * m + self.coeffs, self.order + m, self.ring)

    def map(self, fn, ring=None):
        return TSeries([fn(c) for c in self.coeffs], self.order, ring)

    def egf_values(self):
        """The sequence a_n with c_n = a_n / n!."""
        return [c * math.factorial(n) for n, c in enumerate(self.coeffs)]

    def to_json(self):
        return {"order": self.order, "coeffs": [to_json(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data, ring):
        if ring is Fraction:
            coeffs = [Fraction(s) for s in data["coeffs"]]
        else:
            coeffs = [ring.from_json(c) for c in data["coeffs"]]
        return cls(coeffs, data["order"], ring)


def series_arith(f, g, op):
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    raise ValueError(f"unknown series operation {op!r}")


def series_exp(f):
    """exp(f) for f with zero constant term, via n g_n = sum_k k f_k g_{n-k}."""
    if f.coeffs[0]:
        raise DomainError("series_exp needs a zero constant term")
    ring = f.ring
    g = [lift(ring, 1)]
    for n in range(1, f.order + 1):
        acc = lift(ring, 0)
        for k in range(1, n + 1):
            if f.coeffs[k] and g[n - k]:
                acc = acc + f.coeffs[k] * g[n - k] * k
        g.append(acc * Fraction(1, n))
    return TSeries._raw(g, f.order, ring)


def series_inverse(f):
    u = unit_scalar(f.coeffs[0])
    if u is None:
        raise DomainError("series_inverse needs a unit constant term")
    ring = f.ring
    inv_u = 1 / u
    g = [lift(ring, inv_u)]
    for n in range(1, f.order + 1):
        acc = lift(ring, 0)
        for k in range(1, n + 1):
            if f.coeffs[k] and g[n - k]:
                acc = acc + f.coeffs[k] * g[n - k]
        g.append(acc * -inv_u)
    return TSeries._raw(g, f.order, ring)


def series_compose(f, g):
    """f(g).

    ``f`` is either a ``TSeries`` (then ``g`` must have zero constant term) or
    a finite polynomial (``XPoly``/``LPoly``, read as a polynomial in its own
    variable), in which case any ``g`` is accepted.
    """
    if isinstance(f, TSeries):
        if g.coeffs[0]:
            raise DomainError("composing an infinite series needs g with zero constant term")
        coeffs = f.coeffs
        order = min(f.order, g.order)
    elif isinstance(f, (LPoly, XPoly)):
        coeffs = f.coeffs
        order = g.order
    else:
        raise TypeError(f"cannot compose {type(f).__name__}")
    g = g.truncate(order)
    result = TSeries.zero(order, g.ring)
    for c in reversed(coeffs):
        result = result * g + c
    return result


def degen_exp(y, order=DEFAULT_ORDER):
    """Truncated e_lambda^y(t) with coefficients (y)_{n,lambda}/n!."""
    if order < 0:
        raise ValueError("series order must be >= 0")
    ring = XPoly if isinstance(y, XPoly) else LPoly
    y = lift(ring, y)
    coeffs = []
    ff = lift(ring, 1)
    for n in range(order + 1):
        coeffs.append(ff * Fraction(1, math.factorial(n)))
        ff = ff * (y - LAMBDA * n)
    return TSeries._raw(coeffs, order, ring)


def exp_series(order=DEFAULT_ORDER, ring=LPoly):
    """Truncated e^x."""
    return TSeries([Fraction(1, math.factorial(n)) for n in range(order + 1)], order, ring)


def geometric(order=DEFAULT_ORDER, ring=LPoly):
    """Truncated 1/(1 - x) obtained by inverting 1 - x."""
    return series_inverse(TSeries((1, -1), order, ring))


def series_derivative(f):
    if f.order < 1:
        raise PrecisionError("derivative of an order-0 series has no trusted terms")
    return TSeries._raw([c * n for n, c in enumerate(f.coeffs) if n], f.order - 1, f.ring)

"""Exact coefficient rings.

Three rings form a fixed tower:

* ``Rational`` -- ``fractions.Fraction``.
* ``LPoly`` -- dense polynomials in the degeneracy parameter lambda over Rational.
* ``XPoly`` -- dense polynomials in x whose coefficients are ``LPoly``.

Both polynomial types store an ascending tuple of coefficients with trailing
zeros stripped, so equal polynomials have identical representations.  Values
are immutable.
"""

from fractions import Fraction
import math

Rational = Fraction

LAMBDA_SYMBOL = "λ"


def parse_rational(text):
    """Parse ``"num/den"``, ``"num"`` or a finite decimal string into a Fraction."""
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {text!r}") from exc


def format_rational(q):
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def falling_factorial(n, k):
    """Ordinary falling factorial n(n-1)...(n-k+1) of non-negative integers."""
    if n < 0 or k < 0:
        raise ValueError(f"falling_factorial needs n, k >= 0, got ({n}, {k})")
    return math.perm(n, k)


def binomial(n, k):
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def _strip(cs):
    while cs and not cs[-1]:
        cs.pop()
    return tuple(cs)


class _DensePoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        lift = self._lift_coeff
        self.coeffs = _strip([lift(c) for c in coeffs])

    @classmethod
    def _from_normalized(cls, coeffs):
        obj = object.__new__(cls)
        obj.coeffs = coeffs
        return obj

    @classmethod
    def constant(cls, c):
        return cls((c,))

    @classmethod
    def monomial(cls, degree, c=1):
        return cls([0] * degree + [c])

    @classmethod
    def _coerce(cls, other):
        if isinstance(other, cls):
            return other
        if cls._is_scalar(other):
            return cls.constant(other)
        return None

    @property
    def degree(self):
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_constant(self):
        return len(self.coeffs) <= 1

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self._coeff_zero()

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self[0])
        return hash((type(self).__name__, self.coeffs))

    def __neg__(self):
        return self._from_normalized(tuple(-c for c in self.coeffs))

    def __pos__(self):
        return self

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return self._from_normalized(_strip(out))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if self._is_scalar(other):
            return self.scale(other)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return self._from_normalized(())
        out = [None] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                t = ai * bj
                k = i + j
                out[k] = t if out[k] is None else out[k] + t
        zero = self._coeff_zero()
        return self._from_normalized(_strip([zero if c is None else c for c in out]))

    def __rmul__(self, other):
        if self._is_scalar(other):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            raise ValueError("only non-negative integer powers are supported")
        result = self.constant(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def scale(self, c):
        c = self._lift_coeff(c)
        if not c:
            return self._from_normalized(())
        return self._from_normalized(_strip([x * c for x in self.coeffs]))

    def derivative(self):
        """Derivative with respect to the polynomial's own variable."""
        return type(self)(c * i for i, c in enumerate(self.coeffs) if i)

    def shift(self, m):
        """Multiply by the variable to the power m."""
        if not self.coeffs:
            return self
        return self._from_normalized((self._coeff_zero(),) * m + self.coeffs)

    def __repr__(self):
        return f"{type(self).__name__}({self.pretty()!r})"

    def __str__(self):
        return self.pretty()


class LPoly(_DensePoly):
    """Polynomial in lambda with Rational coefficients."""

    __slots__ = ()

    @staticmethod
    def _is_scalar(c):
        return isinstance(c, (int, Fraction))

    @staticmethod
    def _lift_coeff(c):
        if isinstance(c, Fraction):
            return c
        if isinstance(c, int):
            return Fraction(c)
        raise TypeError(f"cannot use {type(c).__name__} as an LPoly coefficient")

    @staticmethod
    def _coeff_zero():
        return Fraction(0)

    def __call__(self, lam):
        return self.evaluate(lam)

    def evaluate(self, lam):
        lam = Fraction(lam)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * lam + c
        return acc

    def to_json(self):
        return [format_rational(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data):
        return cls(parse_rational(s) for s in data)

    def pretty(self, var=LAMBDA_SYMBOL):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(_term(c, _power(var, i)))
        return _join_terms(terms)


class XPoly(_DensePoly):
    """Polynomial in x with ``LPoly`` coefficients."""

    __slots__ = ()

    @staticmethod
    def _is_scalar(c):
        return isinstance(c, (int, Fraction, LPoly))

    @staticmethod
    def _lift_coeff(c):
        if isinstance(c, LPoly):
            return c
        if isinstance(c, (int, Fraction)):
            return LPoly.constant(c)
        raise TypeError(f"cannot use {type(c).__name__} as an XPoly coefficient")

    @staticmethod
    def _coeff_zero():
        return LPoly()

    def __call__(self, x, lam):
        return self.evaluate(x, lam)

    def evaluate(self, x, lam):
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c.evaluate(lam)
        return acc

    def at_lambda(self, lam):
        """Substitute a number for lambda; the result has constant coefficients."""
        return XPoly(c.evaluate(lam) for c in self.coeffs)

    def at_x(self, x):
        """Substitute a number for x, leaving a polynomial in lambda."""
        x = Fraction(x)
        acc = LPoly()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def to_json(self):
        return [c.to_json() for c in self.coeffs]

    @classmethod
    def from_json(cls, data):
        return cls(LPoly.from_json(c) for c in data)

    def pretty(self, var="x"):
        terms = []
        for i in reversed(range(len(self.coeffs))):
            c = self.coeffs[i]
            if not c:
                continue
            mono = _power(var, i)
            if c.is_constant():
                terms.append(_term(c[0], mono))
            elif not mono:
                terms.append(c.pretty())
            else:
                terms.append(f"({c.pretty()}){mono}")
        return _join_terms(terms)


def _power(var, i):
    if i == 0:
        return ""
    if i == 1:
        return var
    return f"{var}^{i}"


def _term(c, mono):
    if not mono:
        return format_rational(c)
    if c == 1:
        return mono
    if c == -1:
        return "-" + mono
    if c.denominator == 1:
        return f"{c.numerator}{mono}"
    return f"({format_rational(c)}){mono}"


def _join_terms(terms):
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        if t.startswith("-"):
            out += " - " + t[1:]
        else:
            out += " + " + t
    return out


LAMBDA = LPoly((0, 1))
X = XPoly((0, 1))

RING_ORDER = (Fraction, LPoly, XPoly)


def ring_of(c):
    """The smallest ring in the tower containing ``c``."""
    if isinstance(c, XPoly):
        return XPoly
    if isinstance(c, LPoly):
        return LPoly
    if isinstance(c, (int, Fraction)):
        return Fraction
    raise TypeError(f"not a ring element: {c!r}")


def join_rings(a, b):
    return a if RING_ORDER.index(a) >= RING_ORDER.index(b) else b


def lift(ring, c):
    """Embed ``c`` into ``ring`` (which must be at least as large as ``c``'s ring)."""
    if isinstance(c, ring):
        return c
    if ring is Fraction:
        if isinstance(c, int):
            return Fraction(c)
        raise TypeError(f"cannot lift {type(c).__name__} to Fraction")
    return ring.constant(c)


def unit_scalar(c):
    """Return the Rational ``u`` when ``c`` equals ``u`` times the identity, u != 0."""
    if isinstance(c, (int, Fraction)):
        u = Fraction(c)
    elif isinstance(c, LPoly):
        u = c[0] if c.is_constant() else None
    elif isinstance(c, XPoly):
        u = c[0][0] if c.is_constant() and c[0].is_constant() else None
    else:
        raise TypeError(f"not a ring element: {c!r}")
    if not u:
        return None
    return u


def to_json(c):
    """Serialize any ring element."""
    if isinstance(c, (int, Fraction)):
        return format_rational(c)
    return c.to_json()

"""Degenerate r-Stirling numbers, r-Bell and two-variable Fubini polynomials.

Everything here is exact in a symbolic lambda.  ``stirling_r`` is the
production path (triangular recurrence); ``stirling_r_oracle`` and
``rstirling_count_oracle`` are independent checks on it.
"""

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
import itertools
import math

from .errors import PrecisionError, ResourceError
from .rings import LAMBDA, LPoly, XPoly, binomial, lift, parse_rational

ENUMERATION_BOUND = 12
ORDERED_ENUMERATION_BOUND = 2_000_000


@dataclass(frozen=True)
class DegenParams:
    """Shift ``r``, degree index ``n`` and an optional numeric lambda."""

    r: int
    n: int
    lam: Fraction | None = None

    def __post_init__(self):
        _check_nonneg(r=self.r, n=self.n)
        if self.lam is not None:
            object.__setattr__(self, "lam", parse_rational(self.lam))

    @property
    def symbolic(self):
        return self.lam is None


def _check_nonneg(**kwargs):
    for name, value in kwargs.items():
        if not isinstance(value, int) or value < 0:
            raise ValueError(f"{name} must be a non-negative integer, got {value!r}")


def falling_factorial_deg(y, n):
    """(y)_{n,lambda} = y(y - lambda)...(y - (n-1)lambda).

    A numeric or ``LPoly`` ``y`` gives an ``LPoly``; pass ``rings.X`` (or any
    ``XPoly``) for the symbolic-x version.
    """
    _check_nonneg(n=n)
    ring = XPoly if isinstance(y, XPoly) else LPoly
    y = lift(ring, y)
    out = lift(ring, 1)
    for j in range(n):
        out = out * (y - LAMBDA * j)
    return out


@lru_cache(maxsize=64)
def stirling_table(n_max, r):
    """Rows 0..n_max of the degenerate r-Stirling triangle.

    Row n+1 comes from row n by
        S(n+1, k) = S(n, k-1) + (k + r - n*lambda) * S(n, k).
    At k = 0 (with S(n, -1) = 0) this is the column law S(n, 0) = (r)_{n,lambda}.
    """
    _check_nonneg(n_max=n_max, r=r)
    rows = [(LPoly.constant(1),)]
    for n in range(n_max):
        prev = rows[-1]
        row = []
        for k in range(n + 2):
            left = prev[k - 1] if k >= 1 else LPoly()
            here = prev[k] * LPoly((k + r, -n)) if k <= n else LPoly()
            row.append(left + here)
        rows.append(tuple(row))
    return tuple(rows)


def stirling_r(n, k, r):
    _check_nonneg(n=n, r=r)
    if k < 0 or k > n:
        return LPoly()
    return stirling_table(n, r)[n][k]


def stirling_r_oracle(n, k, r):
    """Stirling value by forward differences of f(x) = (x + r)_{n,lambda}.

    Writing f in the falling-factorial basis, the k-th coefficient is
    Delta^k f(0) / k!, computed from f(0), ..., f(k).
    """
    _check_nonneg(n=n, r=r)
    if k < 0 or k > n:
        return LPoly()
    acc = LPoly()
    for i in range(k + 1):
        sign = -1 if (k - i) % 2 else 1
        acc = acc + falling_factorial_deg(i + r, n) * (sign * binomial(k, i))
    return acc * Fraction(1, math.factorial(k))


def _walk_partitions(size, r, counts):
    """Visit every set partition of {0..size-1} with 0..r-1 in distinct blocks.

    Partitions are generated as restricted growth strings; ``counts`` is
    incremented at the block count of each one.
    """

    def walk(i, blocks):
        if i == size:
            counts[blocks] += 1
            return
        if i < r:
            walk(i + 1, blocks + 1)
            return
        for _ in range(blocks):
            walk(i + 1, blocks)
        walk(i + 1, blocks + 1)

    walk(0, 0)
    return counts


@lru_cache(maxsize=None)
def _rpartition_block_counts(n, r):
    if n + r > ENUMERATION_BOUND:
        raise ResourceError(
            f"partition enumeration limited to n + r <= {ENUMERATION_BOUND}, got {n + r}"
        )
    return _walk_partitions(n + r, r, Counter())


def rstirling_count_oracle(n, k, r):
    """Count partitions of {1..n+r} into k+r blocks with 1..r in distinct blocks."""
    _check_nonneg(n=n, r=r)
    if k < 0 or k > n:
        return 0
    return _rpartition_block_counts(n, r)[k + r]


def ordered_rpartition_count_oracle(n, r):
    """Brute-force count behind F_n(1|r) at lambda = 0.

    Each of the n non-special elements either joins one of the r special
    blocks or gets a rank; the ranks used must be exactly {0..k-1} for some k,
    which orders the k ordinary blocks.
    """
    _check_nonneg(n=n, r=r)
    if (n + r) ** n > ORDERED_ENUMERATION_BOUND:
        raise ResourceError(f"ordered enumeration too large for n={n}, r={r}")
    total = 0
    for labels in itertools.product(range(r + n), repeat=n):
        ranks = {lab - r for lab in labels if lab >= r}
        if ranks == set(range(len(ranks))):
            total += 1
    return total


def bell_r(p, r):
    """phi_{p,lambda}^{(r)}(x) = sum_k S(p, k; r) x^k."""
    _check_nonneg(p=p, r=r)
    return XPoly(stirling_table(p, r)[p])


def fubini_r(p, r):
    """F_{p,lambda}(x|r) = sum_k k! S(p, k; r) x^k."""
    _check_nonneg(p=p, r=r)
    return XPoly(s * math.factorial(k) for k, s in enumerate(stirling_table(p, r)[p]))


def dobinski_partial(p, r, x, lam, K):
    """sum_{k=0}^{K} (k + r)_{p,lam} x^k / k!, exactly."""
    _check_nonneg(p=p, r=r, K=K)
    x, lam = Fraction(x), Fraction(lam)
    return sum((_term(p, r, x, lam, k) for k in range(K + 1)), Fraction(0))


def _term(p, r, x, lam, k):
    ff = Fraction(1)
    for j in range(p):
        ff *= k + r - j * lam
    return ff * x**k / math.factorial(k)


def dobinski_float(p, r, x, lam, K=40, tol=1e-9):
    """e^{-x} times the Dobinski partial sum with K+1 terms, as a float.

    Raises PrecisionError unless the last term is below tol/10 and the last
    three terms strictly decrease in magnitude.
    """
    _check_nonneg(p=p, r=r, K=K)
    x, lam = Fraction(x), Fraction(lam)
    if x <= 0:
        raise ValueError("dobinski_float needs x > 0")
    if tol <= 0:
        raise ValueError("tol must be positive")
    terms = [_term(p, r, x, lam, k) for k in range(K + 1)]
    tail = [abs(t) for t in terms[-3:]]
    decreasing = len(tail) == 3 and tail[0] > tail[1] > tail[2]
    if not decreasing or tail[-1] >= Fraction(tol) / 10:
        raise PrecisionError(
            f"Dobinski tail guard failed with {K + 1} terms; increase the number of terms"
        )
    return math.exp(-float(x)) * float(sum(terms, Fraction(0)))

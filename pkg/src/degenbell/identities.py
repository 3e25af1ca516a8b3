"""Executable identity checks.

Every check builds two (or three) exact objects by independent routes and
reports the lowest power at which they disagree.  Checks hold identically in
symbolic lambda: comparisons are ``LPoly``/``XPoly`` equalities.

The ``r * phi^{(r-1)}`` terms that appear in several recurrences carry the
multiplier r, so for r = 0 they are omitted and phi^{(-1)} is never built.
"""

from dataclasses import dataclass
from fractions import Fraction
import math

from .degen import (
    ENUMERATION_BOUND,
    ORDERED_ENUMERATION_BOUND,
    bell_r,
    falling_factorial_deg,
    fubini_r,
    ordered_rpartition_count_oracle,
    rstirling_count_oracle,
    stirling_r,
    stirling_r_oracle,
)
from .errors import DegenError, PrecisionError
from .operators import OperatorSpec, antiderivative0, deriv_m_scaled, div_by_var, xddx_r
from .rings import LAMBDA, LPoly, X, XPoly, binomial, to_json
from .series import (
    DEFAULT_ORDER,
    TSeries,
    degen_exp,
    exp_series,
    geometric,
    series_compose,
    series_derivative,
    series_exp,
    series_inverse,
)


@dataclass(frozen=True)
class Mismatch:
    power: int
    expected: object
    actual: object

    def to_json(self):
        return {"power": self.power, "expected": to_json(self.expected), "actual": to_json(self.actual)}


@dataclass(frozen=True)
class CheckReport:
    id: str
    params: dict
    passed: bool
    first_mismatch: Mismatch | None = None
    error: str | None = None

    def to_json(self):
        out = {
            "id": self.id,
            "params": dict(self.params),
            "pass": self.passed,
            "first_mismatch": self.first_mismatch.to_json() if self.first_mismatch else None,
        }
        if self.error is not None:
            out["error"] = self.error
        return out


def _report(check_id, params, *comparisons):
    """Pass iff every (expected, actual) pair agrees; keeps the first mismatch."""
    for mismatch in comparisons:
        if mismatch is not None:
            return CheckReport(check_id, params, False, mismatch)
    return CheckReport(check_id, params, True)


def _params(order=None, **kwargs):
    out = dict(kwargs)
    if order is not None:
        out["order"] = order
    out["lambda"] = "symbolic"
    return out


def compare_seq(expected, actual, upto):
    for n in range(upto + 1):
        if expected[n] != actual[n]:
            return Mismatch(n, expected[n], actual[n])
    return None


def compare_series(expected, actual, order):
    for s in (expected, actual):
        if isinstance(s, TSeries) and s.order < order:
            raise PrecisionError(f"series trusted only to order {s.order}, need {order}")
    return compare_seq(expected, actual, order)


def compare_poly(expected, actual):
    return compare_seq(expected, actual, max(expected.degree, actual.degree, 0))


# -- series builders --------------------------------------------------------


def ff_shift(n, r, p):
    """(n + r)_{p,lambda}."""
    return falling_factorial_deg(n + r, p)


def t_series(p, r, order=DEFAULT_ORDER):
    """x-series with c_n = (sum_{k<=n} (k+r)_{p,lambda}) / n!."""
    coeffs = []
    partial = LPoly()
    for n in range(order + 1):
        partial = partial + ff_shift(n, r, p)
        coeffs.append(partial * Fraction(1, math.factorial(n)))
    return TSeries(coeffs, order, LPoly)


def y_series(p, r, order=DEFAULT_ORDER):
    """x-series with c_0 = 0 and c_n = (sum_{k<n} (k+r)_{p,lambda}) / n!."""
    coeffs = [LPoly()]
    partial = LPoly()
    for n in range(1, order + 1):
        partial = partial + ff_shift(n - 1, r, p)
        coeffs.append(partial * Fraction(1, math.factorial(n)))
    return TSeries(coeffs, order, LPoly)


def exp_neg_series(order=DEFAULT_ORDER):
    return TSeries([Fraction((-1) ** n, math.factorial(n)) for n in range(order + 1)], order, LPoly)


def _sum_coeffs(order, coeff):
    return TSeries([coeff(n) for n in range(order + 1)], order, LPoly)


def _ones_upto(k, order, weight=lambda l: 1):
    return TSeries([weight(l) for l in range(k + 1)], order, LPoly)


# -- generating functions ---------------------------------------------------


def check_gf(kind, *, k=0, r=0, order=DEFAULT_ORDER):
    e1 = degen_exp(1, order) - 1
    er = degen_exp(r, order)
    if kind == "stirling_egf":
        lhs = (e1**k) * er * Fraction(1, math.factorial(k))
        expected = [stirling_r(n, k, r) for n in range(order + 1)]
        return _report("stirling_egf", _params(order, k=k, r=r), compare_seq(expected, lhs.egf_values(), order))
    if kind == "bell_egf":
        lhs = series_exp(e1 * X) * er
        expected = [bell_r(n, r) for n in range(order + 1)]
        return _report("bell_egf", _params(order, r=r), compare_seq(expected, lhs.egf_values(), order))
    if kind == "fubini_egf":
        lhs = series_inverse(1 - e1 * X) * er
        expected = [fubini_r(n, r) for n in range(order + 1)]
        return _report("fubini_egf", _params(order, r=r), compare_seq(expected, lhs.egf_values(), order))
    raise ValueError(f"unknown generating-function check {kind!r}")


# -- recurrences in x -------------------------------------------------------


def _one_ff(m):
    return falling_factorial_deg(1, m)


def check_recurrence(kind, *, n, r=0):
    if n < 0 or r < 0:
        raise ValueError("n and r must be non-negative")
    params = _params(n=n, r=r)
    if kind == "eq14":
        lhs = bell_r(n, r).derivative()
        rhs = XPoly()
        for k in range(n):
            rhs = rhs + bell_r(k, r) * (_one_ff(n - k) * binomial(n, k))
        return _report("eq14", params, compare_poly(lhs, rhs))
    if kind == "eq16":
        lhs = bell_r(n + 1, r)
        one_minus_lam = LPoly((1, -1))
        rhs = XPoly()
        for k in range(n + 1):
            inner = X * bell_r(k, r)
            if r:
                inner = inner + bell_r(k, r - 1) * r
            rhs = rhs + inner * (falling_factorial_deg(one_minus_lam, n - k) * binomial(n, k))
        return _report("eq16", params, compare_poly(lhs, rhs))
    if kind == "thm1":
        if n < 1:
            raise ValueError("thm1 holds for n >= 1")
        # both sides multiplied by x
        lhs = bell_r(n + 1, r)
        phi = bell_r(n, r)
        tail = XPoly()
        for k in range(n):
            tail = tail + bell_r(k, r) * (_one_ff(n - k) * binomial(n - 1, k))
        rhs = X * (phi.derivative() + phi) - X * tail * (LAMBDA * n)
        if r:
            phi_prev = bell_r(n, r - 1)
            tail_prev = XPoly()
            for k in range(n):
                tail_prev = tail_prev + bell_r(k, r - 1) * (_one_ff(n - k) * binomial(n - 1, k))
            rhs = rhs + (phi_prev.derivative() + phi_prev) * r - tail_prev * (LAMBDA * (r * n))
        return _report("thm1", params, compare_poly(lhs, rhs))
    if kind == "eq36":
        expected = [stirling_r_oracle(n, k, r) for k in range(n + 1)]
        actual = [stirling_r(n, k, r) for k in range(n + 1)]
        return _report("eq36", params, compare_seq(expected, actual, n))
    raise ValueError(f"unknown recurrence check {kind!r}")


# -- ODE / antiderivative chain --------------------------------------------


def check_ode(kind, *, p, r=0, order=DEFAULT_ORDER):
    if order < 2:
        raise PrecisionError(f"ODE checks need order >= 2, got {order}")
    params = _params(order, p=p, r=r)
    phi_poly = bell_r(p, r)
    phi = TSeries.from_poly(phi_poly, order)
    y = y_series(p, r, order)
    ex = exp_series(order)
    if kind == "thm2":
        lhs = series_derivative(y)
        rhs = y + ex * phi
        return _report("thm2", params, compare_series(rhs, lhs, order - 1))
    if kind == "cor3":
        lhs = series_derivative(exp_neg_series(order) * y)
        return _report("cor3", params, compare_series(phi, lhs, order - 1))
    if kind == "eq30":
        rhs = ex * TSeries.from_poly(antiderivative0(phi_poly), order)
        return _report("eq30", params, compare_series(rhs, y, order))
    raise ValueError(f"unknown ODE check {kind!r}")


# -- summation identities ---------------------------------------------------


def check_summation(kind, *, p, r=0, order=DEFAULT_ORDER):
    params = _params(order, p=p, r=r)
    ex = exp_series(order)
    t = t_series(p, r, order)
    if kind == "thm4":
        poly = XPoly()
        for k in range(p + 1):
            xk = X**k
            poly = poly + (xk + antiderivative0(xk)) * stirling_r(p, k, r)
        rhs = ex * TSeries.from_poly(poly, order)
        return _report("thm4", params, compare_series(t, rhs, order))
    if kind == "thm5":
        lhs = t - ex * ff_shift(0, r, p)
        integrand = (bell_r(p + 1, r) - ff_shift(0, r, p + 1)) + (
            bell_r(p, r) - ff_shift(0, r, p)
        ) * (LAMBDA * p - r)
        rhs = ex * TSeries.from_poly(antiderivative0(div_by_var(integrand)), order)
        return _report("thm5", params, compare_series(lhs, rhs, order))
    raise ValueError(f"unknown summation check {kind!r}")


# -- ordinary generating functions and operators ----------------------------


def _fubini_at_x_over_1mx(poly, order):
    """poly(x/(1-x)) as a series."""
    return series_compose(poly, geometric(order).shift(1).truncate(order))


def check_ogf(kind, *, p, r=0, m=0, order=DEFAULT_ORDER):
    if kind in ("thm9", "thm10"):
        params = _params(order, p=p, r=r, m=m)
    else:
        params = _params(order, p=p, r=r)
    spec = OperatorSpec(p, r)
    geo = geometric(order)
    fub = _fubini_at_x_over_1mx(fubini_r(p, r), order)
    flat = _sum_coeffs(order, lambda n: ff_shift(n, r, p))
    if kind == "thm6_flat":
        return _report(kind, params, compare_series(flat, geo * fub, order))
    if kind == "thm6_sq":
        partial = _sum_coeffs(order, lambda n: sum((ff_shift(k, r, p) for k in range(n + 1)), LPoly()))
        return _report(kind, params, compare_series(partial, geo * geo * fub, order))
    if kind == "eq41":
        return _report(kind, params, compare_series(flat, xddx_r(geo, spec), order))
    if kind == "cor7":
        lhs = TSeries.zero(order, LPoly)
        # terms with n >= order only touch powers above the order
        for n in range(order + 1):
            lhs = lhs + (geo - _ones_upto(n, order)) * ff_shift(n, r, p)
        rhs = (geo * geo * fub).shift(1)
        return _report(kind, params, compare_series(rhs, lhs, order))
    geo_m = geo ** (m + 1)
    if kind == "thm9":
        op_side = xddx_r(geo_m, spec)
        middle = _sum_coeffs(order, lambda n: ff_shift(n, r, p) * binomial(n + m, n))
        weighted = XPoly(
            stirling_r(p, k, r) * (math.factorial(k) * binomial(k + m, m)) for k in range(p + 1)
        )
        fub_side = geo_m * _fubini_at_x_over_1mx(weighted, order)
        return _report(
            kind, params, compare_series(middle, op_side, order), compare_series(middle, fub_side, order)
        )
    if kind == "thm10":
        lhs = deriv_m_scaled(geo * geo * fub, m) - xddx_r(geo_m, spec)
        middle = _sum_coeffs(
            order,
            lambda n: sum((ff_shift(k, r, p) for k in range(n)), LPoly()) * binomial(n + m, n),
        )
        rhs = TSeries.zero(order, LPoly)
        for k in range(order + 1):
            partial = _ones_upto(k, order, lambda l: binomial(m + l, l))
            rhs = rhs + (geo_m - partial) * ff_shift(k, r, p)
        return _report(kind, params, compare_series(middle, lhs, order), compare_series(middle, rhs, order))
    raise ValueError(f"unknown OGF check {kind!r}")


# -- derivative identities ----------------------------------------------------


def check_derivative_identity(kind, *, n=0, p=0, r=0, m=0, order=DEFAULT_ORDER):
    if kind == "thm8":
        lhs = deriv_m_scaled(fubini_r(n, r), m)
        rhs = XPoly(
            stirling_r(n, k, r) * (math.factorial(k) * binomial(k + m, m)) for k in range(n + 1)
        )
        return _report(kind, _params(n=n, r=r, m=m), compare_poly(rhs, lhs))
    if kind == "eq33":
        ex = exp_series(order)
        lhs = xddx_r(ex, OperatorSpec(p, r))
        rhs = ex * TSeries.from_poly(bell_r(p, r), order)
        middle = _sum_coeffs(order, lambda j: ff_shift(j, r, p) * Fraction(1, math.factorial(j)))
        return _report(
            kind,
            _params(order, p=p, r=r),
            compare_series(rhs, lhs, order),
            compare_series(middle, lhs, order),
        )
    raise ValueError(f"unknown derivative check {kind!r}")


# -- classical lambda -> 0 limits --------------------------------------------


def _at_zero(c):
    return c.evaluate(0)


def check_limit_classical(kind, *, n=0, r=0, order=DEFAULT_ORDER):
    if kind == "rstirling":
        expected = [rstirling_count_oracle(n, k, r) for k in range(n + 1)]
        actual = [stirling_r(n, k, r).evaluate(0) for k in range(n + 1)]
        params = _params(n=n, r=r)
        params["lambda"] = "0"
        return _report("limit_rstirling", params, compare_seq(expected, actual, n))
    params = _params(order, r=r)
    params["lambda"] = "0"
    # classical e^{t} and e^{rt} from the degenerate series at lambda = 0
    e1 = degen_exp(1, order).map(_at_zero, LPoly) - 1
    er = degen_exp(r, order).map(_at_zero, LPoly)
    if kind == "bell":
        lhs = series_exp(e1 * X) * er
        expected = [bell_r(j, r).at_lambda(0) for j in range(order + 1)]
        counts = [
            (j, sum(rstirling_count_oracle(j, k, r) for k in range(j + 1)), bell_r(j, r).evaluate(1, 0))
            for j in range(order + 1)
            if j + r < ENUMERATION_BOUND
        ]
        check_id = "limit_bell"
    elif kind == "fubini":
        lhs = series_inverse(1 - e1 * X) * er
        expected = [fubini_r(j, r).at_lambda(0) for j in range(order + 1)]
        counts = [
            (j, ordered_rpartition_count_oracle(j, r), fubini_r(j, r).evaluate(1, 0))
            for j in range(order + 1)
            if (j + r) ** j <= ORDERED_ENUMERATION_BOUND
        ]
        check_id = "limit_fubini"
    else:
        raise ValueError(f"unknown classical-limit check {kind!r}")
    count_mismatch = next((Mismatch(j, want, got) for j, want, got in counts if want != got), None)
    return _report(check_id, params, compare_seq(expected, lhs.egf_values(), order), count_mismatch)


# -- suite ------------------------------------------------------------------


@dataclass(frozen=True)
class SuiteConfig:
    order: int = DEFAULT_ORDER
    p_max: int = 6
    r_max: int = 3
    n_max: int = 10
    m_max: int = 4
    ids: tuple | None = None

    def __post_init__(self):
        for name in ("order", "p_max", "r_max", "n_max", "m_max"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be non-negative")


RSTIRLING_N_MAX = 8
RSTIRLING_SIZE_MAX = 11


def _ps(c):
    return range(c.p_max + 1)


def _rs(c):
    return range(c.r_max + 1)


def _sweep(**ranges):
    def sweep(c):
        keys = list(ranges)
        out = [{}]
        for key in keys:
            out = [dict(d, **{key: v}) for d in out for v in ranges[key](c)]
        return out

    return sweep


@dataclass(frozen=True)
class _Entry:
    id: str
    run: object
    sweep: object
    uses_order: bool = True


def _entries():
    def gf(kind):
        return lambda **kw: check_gf(kind, **kw)

    def rec(kind):
        return lambda **kw: check_recurrence(kind, **kw)

    def ode(kind):
        return lambda **kw: check_ode(kind, **kw)

    def summ(kind):
        return lambda **kw: check_summation(kind, **kw)

    def ogf(kind):
        return lambda **kw: check_ogf(kind, **kw)

    def der(kind):
        return lambda **kw: check_derivative_identity(kind, **kw)

    def lim(kind):
        return lambda **kw: check_limit_classical(kind, **kw)

    ns = lambda c: range(c.n_max + 1)  # noqa: E731
    ns1 = lambda c: range(1, c.n_max + 1)  # noqa: E731
    ms = lambda c: range(c.m_max + 1)  # noqa: E731
    p_r = _sweep(p=_ps, r=_rs)

    def rstirling_sweep(c):
        return [
            {"n": n, "r": r}
            for r in _rs(c)
            for n in range(min(c.n_max, RSTIRLING_N_MAX) + 1)
            if n + r <= RSTIRLING_SIZE_MAX
        ]

    return [
        _Entry("stirling_egf", gf("stirling_egf"), _sweep(k=_ps, r=_rs)),
        _Entry("bell_egf", gf("bell_egf"), _sweep(r=_rs)),
        _Entry("fubini_egf", gf("fubini_egf"), _sweep(r=_rs)),
        _Entry("eq14", rec("eq14"), _sweep(n=ns1, r=_rs), uses_order=False),
        _Entry("eq16", rec("eq16"), _sweep(n=ns, r=_rs), uses_order=False),
        _Entry("thm1", rec("thm1"), _sweep(n=ns1, r=_rs), uses_order=False),
        _Entry("eq36", rec("eq36"), _sweep(n=ns, r=_rs), uses_order=False),
        _Entry("thm2", ode("thm2"), p_r),
        _Entry("cor3", ode("cor3"), p_r),
        _Entry("eq30", ode("eq30"), p_r),
        _Entry("thm4", summ("thm4"), p_r),
        _Entry("thm5", summ("thm5"), p_r),
        _Entry("thm6_flat", ogf("thm6_flat"), p_r),
        _Entry("thm6_sq", ogf("thm6_sq"), p_r),
        _Entry("cor7", ogf("cor7"), p_r),
        _Entry("eq41", ogf("eq41"), p_r),
        _Entry("thm9", ogf("thm9"), _sweep(p=_ps, r=_rs, m=ms)),
        _Entry("thm10", ogf("thm10"), _sweep(p=_ps, r=_rs, m=ms)),
        _Entry("thm8", der("thm8"), _sweep(n=ns, r=_rs, m=ms), uses_order=False),
        _Entry("eq33", der("eq33"), p_r),
        _Entry("limit_rstirling", lim("rstirling"), rstirling_sweep, uses_order=False),
        _Entry("limit_bell", lim("bell"), _sweep(r=_rs)),
        _Entry("limit_fubini", lim("fubini"), _sweep(r=_rs)),
    ]


REGISTRY = {e.id: e for e in _entries()}
CHECK_IDS = tuple(REGISTRY)


def run_check(check_id, **kwargs):
    """Run one registered check; library errors become failed reports."""
    entry = REGISTRY[check_id]
    try:
        return entry.run(**kwargs)
    except DegenError as exc:
        params = _params(**kwargs)
        return CheckReport(check_id, params, False, None, f"{type(exc).__name__}: {exc}")


def run_suite(config=None):
    config = config or SuiteConfig()
    ids = CHECK_IDS if config.ids is None else tuple(config.ids)
    unknown = [i for i in ids if i not in REGISTRY]
    if unknown:
        raise KeyError(f"unknown check ids: {', '.join(unknown)}")
    reports = []
    for check_id in ids:
        entry = REGISTRY[check_id]
        for kwargs in entry.sweep(config):
            if entry.uses_order:
                kwargs["order"] = config.order
            reports.append(run_check(check_id, **kwargs))
    return reports


def all_passed(reports):
    return all(rep.passed for rep in reports)

"""Degenerate r-Stirling numbers, r-Bell and two-variable Fubini polynomials,
computed exactly in a symbolic degeneracy parameter lambda, with executable
checks of their generating-function and recurrence identities."""

from .degen import (
    DegenParams,
    bell_r,
    dobinski_float,
    dobinski_partial,
    falling_factorial_deg,
    fubini_r,
    ordered_rpartition_count_oracle,
    rstirling_count_oracle,
    stirling_r,
    stirling_r_oracle,
    stirling_table,
)
from .errors import DegenError, DomainError, PrecisionError, ResourceError
from .identities import CHECK_IDS, CheckReport, SuiteConfig, run_check, run_suite
from .operators import OperatorSpec, antiderivative0, deriv_m_scaled, div_by_var, xddx_r
from .rings import LAMBDA, X, LPoly, Rational, XPoly, binomial, falling_factorial
from .series import (
    TSeries,
    degen_exp,
    series_compose,
    series_derivative,
    series_exp,
    series_inverse,
)

__version__ = "0.1.0"

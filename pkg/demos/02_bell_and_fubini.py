# Degenerate r-Bell and two-variable degenerate Fubini polynomials.
from fractions import Fraction

from degenbell import bell_r, fubini_r, degen_exp, series_exp, series_inverse, X

print("phi_3^(2)(x) =", bell_r(3, 2))
print("F_3(x|2)     =", fubini_r(3, 2))

# classical limits at lambda = 0, r = 0, x = 1: Bell and ordered Bell numbers
print([int(bell_r(p, 0).evaluate(1, 0)) for p in range(8)])
print([int(fubini_r(p, 0).evaluate(1, 0)) for p in range(8)])

# the same polynomials fall out of their exponential generating functions
N = 6
e1 = degen_exp(1, N) - 1
bell_egf = series_exp(e1 * X) * degen_exp(2, N)
fubini_egf = series_inverse(1 - e1 * X) * degen_exp(2, N)
print(bell_egf.egf_values()[3] == bell_r(3, 2), fubini_egf.egf_values()[3] == fubini_r(3, 2))

# exact values at a rational point
print(bell_r(4, 1).evaluate(Fraction(2, 3), Fraction(1, 5)))

# Dobinski-like formula: e^{-x} sum_k (k+r)_{p,lambda} x^k / k! reproduces phi_p^(r)(x).
from fractions import Fraction

from degenbell import bell_r, dobinski_float, PrecisionError

p, r, x, lam = 5, 2, Fraction(1), Fraction(1, 2)
exact = bell_r(p, r).evaluate(x, lam)
print("exact polynomial value:", exact, float(exact))

for K in (2, 10, 20, 40):
    try:
        value = dobinski_float(p, r, x, lam, K=K, tol=1e-9)
    except PrecisionError as exc:
        print(f"K={K:2d}: {exc}")
        continue
    print(f"K={K:2d}: {value!r}  diff={value - float(exact):.2e}")

"""Exact numbers: rationals, Q(sqrt 3), quadratic weights and zeta values.

Run with ``python demos/01_exact_numbers.py``.
"""

# %% Rationals are plain fractions.Fraction; parsing refuses decimals.
from fractions import Fraction

from cayley_weights.exact import (
    QSqrt3,
    QuadraticWeight,
    format_rational,
    hurwitz_nonpositive,
    parse_rational,
    zeta_nonpositive,
)

kappa = parse_rational("8/3")
print("kappa =", format_rational(kappa), "; 1/kappa =", format_rational(1 / kappa))
try:
    parse_rational("2.6667")
except ValueError as err:
    print("refused:", err)

# %% The field Q(sqrt 3) carries the 2/sqrt 3 coefficients of the frame computation.
two_over_root3 = 2 / QSqrt3(0, 1)
print("2/sqrt3 =", two_over_root3, "; squared =", two_over_root3 * two_over_root3)

# %% Exceptional weights live in -1 +/- sqrt(r); perfect squares collapse to rationals.
w = QuadraticWeight(1, Fraction(5))
print(w.to_json(), "lies in (1, 2):", w.cmp_rational(1) > 0 and w.cmp_rational(2) < 0)
print("-1 + sqrt(9/4) is rational:", QuadraticWeight(1, Fraction(9, 4)).to_rational())

# %% Regularized power sums at negative integers.
for n in range(4):
    print(f"zeta({-n}) = {format_rational(zeta_nonpositive(n))}",
          f" zeta({-n}, 3) = {format_rational(hurwitz_nonpositive(n, 3))}")

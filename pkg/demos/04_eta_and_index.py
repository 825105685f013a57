"""Eta invariant, index correction and the expected index across a rate window."""

from fractions import Fraction

from cayley_weights.exact import format_rational
from cayley_weights.eta import IndexQuery, NonFredholmRate, RegularizationError, eta_report, expected_index
from cayley_weights.profiles import C1, C2

# %% The multiplicity sequence is eventually polynomial; its asymmetry is zeta-regularized.
report = eta_report(C1)
def show(poly):
    return " + ".join(f"{format_rational(c)} x^{j}" for j, c in enumerate(poly) if c)


print("d(x), x >= 1:", show(report.fit.tail_positive))
print("d(x), x <= -1:", show(report.fit.tail_negative))
print("d(k) - d(-k):", show(report.fit.asymmetry()))
print("eta(0) =", report.eta, " d(0) =", report.d0, " correction =", report.correction)

# %% Moving the head/tail split does not change the answer.
print({k0: format_rational(eta_report(C1, k0=k0).eta) for k0 in (1, 3, 5)})

# %% Irrational weight sets are refused rather than approximated.
try:
    eta_report(C2)
except RegularizationError as err:
    print("c2:", err)

# %% The expected index is constant between exceptional weights.
for mu in (Fraction(11, 10), Fraction(3, 2), Fraction(19, 10)):
    print(mu, expected_index(IndexQuery(4, mu, C1)))
try:
    expected_index(IndexQuery(4, 1, C1))
except NonFredholmRate as err:
    print(err)

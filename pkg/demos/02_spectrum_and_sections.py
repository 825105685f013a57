"""The twisted Laplacian on CP^1 and the section counts behind it."""

# %% Section counts by Riemann-Roch, with the indeterminate range made explicit.
from cayley_weights.riemann_roch import IndeterminateError, LineBundle, genus_complete_intersection, h0

print("h0(O(3)) on CP^1:", h0(LineBundle(3)))
g = genus_complete_intersection(4, 3)
print("genus of a (4,3) complete intersection:", g)
print("h0 of degree 40 on that curve:", h0(LineBundle(40, g)))
try:
    h0(LineBundle(10, g))
except IndeterminateError as err:
    print("degree 10:", err)

# %% Eigenvalues of 2 dbar^* dbar, each paired with a section-count check.
from cayley_weights.spectrum import SpectrumQuery, eigenspace_dimension_crosscheck, eigenvalue_membership, enumerate_spectrum

query = SpectrumQuery(-3, 8)
for line in enumerate_spectrum(query, 4):
    check = eigenspace_dimension_crosscheck(query, line.q)
    print(f"q={line.q}: eigenvalue {line.eigenvalue}, multiplicity {line.multiplicity}, section count {check}")

# %% Membership is a quadratic in q, solved exactly.
for target in (12, 13, 40):
    hit = eigenvalue_membership(query, target)
    print(target, "->", None if hit is None else (hit.q, hit.multiplicity))

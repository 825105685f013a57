"""Infinitesimal conical deformations of the three example cones."""

from fractions import Fraction

from cayley_weights.deformations import coupling_parameters, coupled_target, conical_cayley_dimension, twisted_cubic_coupled
from cayley_weights.profiles import BUILTINS

# %% Cayley versus complex dimension, with the modes that make the difference.
for name, profile in BUILTINS.items():
    r = conical_cayley_dimension(profile)
    print(f"{name}: cayley {r.cayley_dim}, complex {r.complex_dim}")
    for e in r.extra_modes:
        print(f"   m = {e.mode}: +{e.count} ({e.mechanism})")
    for a in r.assumptions:
        print("   assumes:", a)

# %% The twisted cubic couples two components; both branches at m = -2/3.
m = Fraction(-2, 3)
for p in coupling_parameters(m):
    print(p.branch, "a =", p.value, "target =", coupled_target(m, p.value))
print([(e.count, e.mechanism) for e in twisted_cubic_coupled(m)])

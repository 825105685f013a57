"""Exceptional weights of the diagonal cones and where they come from."""

# %% Multiplicities for the cone over a line, with their witnesses.
from cayley_weights.profiles import C1, C2
from cayley_weights.weights import enumerate_weights, weight_multiplicity

entry = weight_multiplicity(C1, 1)
print("d(1) on c1 =", entry.multiplicity)
for w in entry.witnesses:
    print(f"  mode {w.mode}, {w.kind}, summand {w.summand}: {w.count}")

# %% The closed forms on both sides of zero.
for lam in range(1, 6):
    print(lam, weight_multiplicity(C1, lam).multiplicity, weight_multiplicity(C1, -lam).multiplicity)

# %% The conic-bundle cone picks up irrational weights.
for e in enumerate_weights(C2, -1, 3):
    label = e.weight.to_rational() if e.weight.is_rational() else f"-1{'+' if e.weight.sign > 0 else '-'}sqrt({e.weight.radicand})"
    print(f"{label}: d = {e.multiplicity} {e.by_kind()}")

"""Exceptional weights of ``dbar + dbar^*`` on a conically singular complex surface.

At a weight ``lambda`` and Fourier mode ``m`` the problem on the complex link is

    dbar v   = (lambda + 3 + m) w
    dbar^* w = (lambda - 1 - m) v / 2

for ``v`` a section of the twisted normal bundle.  Solutions split into three
disjoint kinds:

* holomorphic kernel (``w = 0``): forces ``m = lambda - 1``;
* antiholomorphic kernel (``v = 0``): forces ``m = -3 - lambda``, counted by
  the Serre-dual degree ``2g - 2 - d``;
* laplacian: ``2 dbar^* dbar v = (lambda - 1 - m)(lambda + 3 + m) v`` with a
  strictly positive target, read off the closed-form spectrum.

Writing ``u = lambda + 1`` the laplacian target is ``u^2 - (m + 2)^2``, so a
spectral line with eigenvalue ``T`` at mode ``m`` produces the weights
``-1 +- sqrt((m + 2)^2 + T)``.  Enumeration generates these candidates instead
of scanning a grid, which would miss irrational weights.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction

from .exact import QuadraticWeight, RationalLike, as_rational
from .profiles import ConeProfile
from .riemann_roch import LineBundle, h0
from .spectrum import SpectralLine, SpectrumQuery, eigenvalue_membership

HOLOMORPHIC = "holomorphic-kernel"
ANTIHOLOMORPHIC = "antiholomorphic-kernel"
LAPLACIAN = "laplacian"

DEFAULT_Q_CAP = 64


@dataclass(frozen=True)
class Witness:
    mode: Fraction
    index: int
    kind: str
    summand: int
    count: int
    target: Fraction | None = None
    line: SpectralLine | None = None


@dataclass(frozen=True)
class WeightEntry:
    weight: QuadraticWeight
    multiplicity: int
    witnesses: tuple[Witness, ...] = field(default=())

    def by_kind(self) -> dict[str, int]:
        out: dict[str, int] = defaultdict(int)
        for w in self.witnesses:
            out[w.kind] += w.count
        return dict(out)


def laplacian_target(lam: RationalLike, m: RationalLike) -> Fraction:
    lam, m = as_rational(lam), as_rational(m)
    return (lam - 1 - m) * (lam + 3 + m)


def mode_range(profile: ConeProfile, lam: RationalLike) -> list[int]:
    """Lattice indices ``n`` whose mode ``m = n/k`` gives a positive laplacian target."""
    lam = as_rational(lam)
    k = profile.lattice_denominator
    lo, hi = sorted((-3 - lam, lam - 1))
    first = math.floor(lo * k) + 1
    last = math.ceil(hi * k) - 1
    return list(range(first, last + 1))


def _holomorphic(profile: ConeProfile, n: int) -> list[Witness]:
    out = []
    for i, d in enumerate(profile.degrees(n)):
        c = h0(LineBundle(d, profile.genus))
        if c:
            out.append(Witness(profile.mode(n), n, HOLOMORPHIC, i, c))
    return out


def _antiholomorphic(profile: ConeProfile, n: int) -> list[Witness]:
    out = []
    for i, d in enumerate(profile.degrees(n)):
        c = h0(LineBundle(d, profile.genus).serre_dual())
        if c:
            out.append(Witness(profile.mode(n), n, ANTIHOLOMORPHIC, i, c))
    return out


def weight_multiplicity(profile: ConeProfile, lam: RationalLike) -> WeightEntry:
    """d(lambda) for a rational weight, with one witness per contributing summand."""
    profile.require_diagonal()
    lam = as_rational(lam)
    witnesses: list[Witness] = []

    n = profile.index_of(lam - 1)
    if n is not None:
        witnesses += _holomorphic(profile, n)
    n = profile.index_of(-3 - lam)
    if n is not None:
        witnesses += _antiholomorphic(profile, n)

    for n in mode_range(profile, lam):
        m = profile.mode(n)
        target = laplacian_target(lam, m)
        for i, d in enumerate(profile.degrees(n)):
            line = eigenvalue_membership(SpectrumQuery(d, profile.kappa), target)
            if line is not None and line.eigenvalue > 0:
                witnesses.append(Witness(m, n, LAPLACIAN, i, line.multiplicity, target, line))

    total = sum(w.count for w in witnesses)
    return WeightEntry(QuadraticWeight.from_rational(lam), total, tuple(witnesses))


def _kernel_indices(profile: ConeProfile, lo: Fraction, hi: Fraction, shift: Fraction, sign: int):
    # lambda = shift + sign * m must lie in [lo, hi]
    k = profile.lattice_denominator
    a, b = sorted(((lo - shift) * sign, (hi - shift) * sign))
    return range(math.ceil(a * k), math.floor(b * k) + 1)


def enumerate_weights(
    profile: ConeProfile,
    lam_min: RationalLike,
    lam_max: RationalLike,
    q_cap: int = DEFAULT_Q_CAP,
) -> list[WeightEntry]:
    """Every exceptional weight in ``[lam_min, lam_max]``, ascending, merged by value."""
    profile.require_diagonal()
    lo, hi = as_rational(lam_min), as_rational(lam_max)
    if lo > hi:
        raise ValueError(f"empty weight window [{lo}, {hi}]")

    found: dict[QuadraticWeight, list[Witness]] = defaultdict(list)

    for n in _kernel_indices(profile, lo, hi, Fraction(1), 1):
        for w in _holomorphic(profile, n):
            found[QuadraticWeight.from_rational(1 + profile.mode(n))].append(w)
    for n in _kernel_indices(profile, lo, hi, Fraction(-3), -1):
        for w in _antiholomorphic(profile, n):
            found[QuadraticWeight.from_rational(-3 - profile.mode(n))].append(w)

    # |lambda + 1| <= R inside the window, and (m + 2)^2 + T = (lambda + 1)^2
    radius_sq = max((lo + 1) ** 2, (hi + 1) ** 2)
    k = profile.lattice_denominator
    bound = math.isqrt(math.floor(radius_sq * k * k)) + 1
    for j in range(-bound, bound + 1):
        # j = k (m + 2)
        shift_sq = Fraction(j, k) ** 2
        if shift_sq >= radius_sq:
            continue
        n = j - 2 * k
        m = profile.mode(n)
        for i, d in enumerate(profile.degrees(n)):
            query = SpectrumQuery(d, profile.kappa)
            q = 0
            while True:
                line = query.line(q)
                if shift_sq + line.eigenvalue > radius_sq:
                    break
                if q > q_cap:
                    raise ValueError(
                        f"weight window needs spectral lines beyond q = {q_cap}; raise the scan cap"
                    )
                if line.eigenvalue > 0:
                    r = shift_sq + line.eigenvalue
                    for sign in (1, -1):
                        weight = QuadraticWeight(sign, r)
                        if weight.cmp_rational(lo) >= 0 and weight.cmp_rational(hi) <= 0:
                            found[weight].append(
                                Witness(m, n, LAPLACIAN, i, line.multiplicity, line.eigenvalue, line)
                            )
                q += 1

    entries = []
    for weight, ws in found.items():
        ws = sorted(ws, key=lambda w: (w.mode, w.kind, w.summand))
        entries.append(WeightEntry(weight, sum(w.count for w in ws), tuple(ws)))
    entries.sort(key=lambda e: e.weight)
    return entries


def weight_set_is_integral(entries) -> bool:
    return all(e.weight.is_integer() for e in entries)

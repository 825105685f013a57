"""Zeta-regularised eta invariant and the index correction it feeds.

The eta function of a weight set is

    eta(s) = sum over nonzero weights of d(lambda) sign(lambda) |lambda|^{-s}.

When the weight set is integral and ``d`` is eventually polynomial on both
sides, the tail ``sum_{k >= k0} (d(k) - d(-k)) k^{-s}`` is a finite combination
of Hurwitz zeta functions, so ``eta(0)`` is an exact rational.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact import RationalLike, as_rational, hurwitz_nonpositive
from .profiles import ConeProfile
from .weights import DEFAULT_Q_CAP, enumerate_weights, weight_multiplicity, weight_set_is_integral


class RegularizationError(ValueError):
    """The weight set does not have the shape the regularisation needs."""


class NonFredholmRate(ValueError):
    """The rate is an exceptional weight."""


Poly = tuple[Fraction, ...]


def poly_eval(coeffs: Sequence[Fraction], x: RationalLike) -> Fraction:
    x = as_rational(x)
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _trim(coeffs: list[Fraction]) -> Poly:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _poly_mul_linear(coeffs: list[Fraction], root: Fraction) -> list[Fraction]:
    # coeffs * (x - root)
    out = [Fraction(0)] * (len(coeffs) + 1)
    for i, c in enumerate(coeffs):
        out[i + 1] += c
        out[i] -= c * root
    return out


def interpolate(xs: Sequence[RationalLike], ys: Sequence[RationalLike]) -> Poly:
    """Exact interpolating polynomial, coefficients from the constant term up."""
    xs = [as_rational(x) for x in xs]
    ys = [as_rational(y) for y in ys]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    # Newton divided differences
    table = list(ys)
    newton = [table[0]]
    for level in range(1, len(xs)):
        table = [
            (table[i + 1] - table[i]) / (xs[i + level] - xs[i]) for i in range(len(table) - 1)
        ]
        newton.append(table[0])
    coeffs = [Fraction(0)]
    basis = [Fraction(1)]
    for i, c in enumerate(newton):
        coeffs += [Fraction(0)] * (len(basis) - len(coeffs))
        for j, b in enumerate(basis):
            coeffs[j] += c * b
        basis = _poly_mul_linear(basis, xs[i])
    return _trim(coeffs)


def _poly_sub(p: Poly, q: Poly) -> Poly:
    n = max(len(p), len(q))
    p = list(p) + [Fraction(0)] * (n - len(p))
    q = list(q) + [Fraction(0)] * (n - len(q))
    return _trim([a - b for a, b in zip(p, q)])


def _poly_negate_argument(p: Poly) -> Poly:
    """Coefficients of ``x -> p(-x)``."""
    return tuple(c if j % 2 == 0 else -c for j, c in enumerate(p))


@dataclass(frozen=True)
class MultiplicityProfile:
    """Integer weights with ``|lambda| < k0`` listed in ``head``; polynomial tails beyond.

    ``tail_positive(lambda)`` gives ``d(lambda)`` for integers ``lambda >= k0``
    and ``tail_negative(lambda)`` gives it for ``lambda <= -k0``; both are
    coefficient tuples in the variable ``lambda``.
    """

    head: tuple[tuple[int, int], ...]
    tail_positive: Poly
    tail_negative: Poly
    k0: int

    def __post_init__(self):
        object.__setattr__(self, "head", tuple((int(w), int(d)) for w, d in self.head))
        object.__setattr__(self, "tail_positive", _trim([as_rational(c) for c in self.tail_positive]))
        object.__setattr__(self, "tail_negative", _trim([as_rational(c) for c in self.tail_negative]))
        if self.k0 < 1:
            raise ValueError("k0 must be a positive integer")
        for w, d in self.head:
            if abs(w) >= self.k0:
                raise ValueError(f"head weight {w} lies in a tail (k0 = {self.k0})")
            if d < 0:
                raise ValueError("multiplicities are nonnegative")

    def multiplicity(self, lam: int) -> Fraction:
        if lam >= self.k0:
            return poly_eval(self.tail_positive, lam)
        if lam <= -self.k0:
            return poly_eval(self.tail_negative, lam)
        return Fraction(dict(self.head).get(lam, 0))

    def asymmetry(self) -> Poly:
        """Coefficients of ``c(k) = d(k) - d(-k)`` for ``k >= k0``."""
        return _poly_sub(self.tail_positive, _poly_negate_argument(self.tail_negative))


def fit_multiplicity_profile(
    profile: ConeProfile, degree_bound: int, k0: int, q_cap: int = DEFAULT_Q_CAP
) -> MultiplicityProfile:
    if degree_bound < 0 or k0 < 1:
        raise ValueError("degree_bound must be >= 0 and k0 >= 1")
    profile.require_diagonal()
    reach = k0 + degree_bound + 3
    entries = enumerate_weights(profile, -reach, reach, q_cap=q_cap)
    if not weight_set_is_integral(entries):
        odd = next(e.weight for e in entries if not e.weight.is_integer())
        raise RegularizationError(
            f"eta regularization unsupported for irrational weight sets (found {odd})"
        )
    d = {int(e.weight.to_rational()): e.multiplicity for e in entries}

    def fit(sign: int) -> Poly:
        nodes = [sign * (k0 + j) for j in range(degree_bound + 1)]
        poly = interpolate(nodes, [d.get(x, 0) for x in nodes])
        for j in range(1, 4):
            x = sign * (k0 + degree_bound + j)
            if poly_eval(poly, x) != d.get(x, 0):
                raise RegularizationError(
                    "multiplicity sequence not eventually polynomial at this degree bound"
                )
        return poly

    tail_pos, tail_neg = fit(1), fit(-1)
    head = tuple(sorted((w, m) for w, m in d.items() if abs(w) < k0))
    return MultiplicityProfile(head, tail_pos, tail_neg, k0)


def eta_at_zero(mp: MultiplicityProfile) -> Fraction:
    head = sum((Fraction((w > 0) - (w < 0)) * d for w, d in mp.head), Fraction(0))
    tail = sum(
        (c * hurwitz_nonpositive(j, mp.k0) for j, c in enumerate(mp.asymmetry())),
        Fraction(0),
    )
    return head + tail


@dataclass(frozen=True)
class EtaReport:
    eta: Fraction
    d0: int
    correction: Fraction
    fit: MultiplicityProfile


def eta_report(profile: ConeProfile, degree_bound: int = 2, k0: int = 1, q_cap: int = DEFAULT_Q_CAP) -> EtaReport:
    mp = fit_multiplicity_profile(profile, degree_bound, k0, q_cap=q_cap)
    eta = eta_at_zero(mp)
    d0 = weight_multiplicity(profile, 0).multiplicity
    return EtaReport(eta, d0, (d0 + eta) / 2, mp)


def index_correction(profile: ConeProfile, degree_bound: int = 2, k0: int = 1) -> Fraction:
    """``(d(0) + eta(0)) / 2``."""
    return eta_report(profile, degree_bound, k0).correction


@dataclass(frozen=True)
class IndexQuery:
    chi: int
    rate: Fraction
    profile: ConeProfile

    def __post_init__(self):
        object.__setattr__(self, "rate", as_rational(self.rate))


def weight_sum(profile: ConeProfile, lo: RationalLike, hi: RationalLike, q_cap: int = DEFAULT_Q_CAP) -> int:
    """Sum of ``d(lambda)`` over exceptional weights in the open interval ``(lo, hi)``."""
    lo, hi = as_rational(lo), as_rational(hi)
    if lo >= hi:
        return 0
    return sum(
        e.multiplicity
        for e in enumerate_weights(profile, lo, hi, q_cap=q_cap)
        if e.weight.cmp_rational(lo) > 0 and e.weight.cmp_rational(hi) < 0
    )


def expected_index(
    query: IndexQuery, degree_bound: int = 2, k0: int = 1, q_cap: int = DEFAULT_Q_CAP
) -> Fraction:
    """``chi - sum_{0 < lambda < rate} d(lambda) - (d(0) + eta(0)) / 2``."""
    profile, rate = query.profile, query.rate
    if weight_multiplicity(profile, rate).multiplicity > 0:
        raise NonFredholmRate(f"non-Fredholm rate: {rate} is an exceptional weight")
    if not 1 < rate < 2:
        raise ValueError(f"rate must lie in (1, 2), got {rate}")
    correction = eta_report(profile, degree_bound, k0, q_cap=q_cap).correction
    return query.chi - weight_sum(profile, 0, rate, q_cap=q_cap) - correction

"""Spectrum of ``2 dbar^* dbar`` on line bundles over a round CP^1.

For a line bundle of degree ``d`` over CP^1 with constant scalar curvature
``kappa`` the eigenvalues are

    (kappa/2) * ((q + a)^2 + (q + a) * |d + 1|),   q = 0, 1, 2, ...

with ``a = 0`` for ``d >= 0`` and ``a = 1`` otherwise, each of multiplicity
``1 + |d| + 2q``.  Callers working with ``dbar^* dbar`` double their target
before asking.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import RationalLike, as_rational, sqrt_exact
from .riemann_roch import LineBundle, h0


class NegativeEigenvalue(ValueError):
    """2 dbar^* dbar is nonnegative; a negative target can never be hit."""


@dataclass(frozen=True)
class SpectrumQuery:
    degree: int
    kappa: Fraction

    def __post_init__(self):
        k = as_rational(self.kappa)
        if k <= 0:
            raise ValueError(f"scalar curvature must be positive, got {k}")
        object.__setattr__(self, "kappa", k)

    @property
    def shift(self) -> int:
        return 0 if self.degree >= 0 else 1

    @property
    def linear_coefficient(self) -> int:
        return abs(self.degree + 1)

    def eigenvalue(self, q: int) -> Fraction:
        t = q + self.shift
        return self.kappa / 2 * (t * t + t * self.linear_coefficient)

    def multiplicity(self, q: int) -> int:
        return 1 + abs(self.degree) + 2 * q

    def line(self, q: int) -> "SpectralLine":
        return SpectralLine(self.eigenvalue(q), q, self.shift, self.multiplicity(q), self.degree)


@dataclass(frozen=True)
class SpectralLine:
    eigenvalue: Fraction
    q: int
    shift: int
    multiplicity: int
    degree: int


def enumerate_spectrum(query: SpectrumQuery, q_max: int) -> list[SpectralLine]:
    if q_max < 0:
        raise ValueError("q_max must be nonnegative")
    return [query.line(q) for q in range(q_max + 1)]


def eigenvalue_membership(query: SpectrumQuery, target: RationalLike) -> SpectralLine | None:
    """The spectral line with eigenvalue ``target``, or ``None``.

    Solves ``t^2 + c t - 2 target / kappa = 0`` for ``t = q + shift`` exactly.
    """
    target = as_rational(target)
    if target < 0:
        raise NegativeEigenvalue(f"{target} is negative and therefore not an eigenvalue of 2 dbar^* dbar")
    c = query.linear_coefficient
    disc = c * c + 8 * target / query.kappa
    root = sqrt_exact(disc)
    if root is None:
        return None
    t = (root - c) / 2
    if t.denominator != 1 or t < query.shift:
        return None
    return query.line(int(t) - query.shift)


def eigenspace_dimension_crosscheck(query: SpectrumQuery, q: int) -> int:
    """h0 of the bundle whose holomorphic sections model the ``q``-th eigenspace.

    ``K_Sigma^{-q} (x) K`` (degree ``2q + d``) for ``d >= 0`` and
    ``K_Sigma^{-q} (x) K^{-1}`` (degree ``2q - d``) for ``d < 0``.
    """
    if q < 0:
        raise ValueError("q must be nonnegative")
    d = query.degree
    degree = 2 * q + d if d >= 0 else 2 * q - d
    return h0(LineBundle(degree, 0))

"""Holomorphic section counts on compact Riemann surfaces."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


class IndeterminateError(ValueError):
    """Riemann-Roch alone does not decide h0 for this bundle."""


@dataclass(frozen=True)
class LineBundle:
    degree: int
    genus: int = 0

    def __post_init__(self):
        if self.genus < 0:
            raise ValueError(f"genus must be nonnegative, got {self.genus}")

    def serre_dual(self) -> "LineBundle":
        """K tensor the dual bundle."""
        return LineBundle(2 * self.genus - 2 - self.degree, self.genus)


@dataclass(frozen=True)
class BundleSum:
    summands: tuple[LineBundle, ...]

    def __post_init__(self):
        s = tuple(self.summands)
        object.__setattr__(self, "summands", s)
        if not s:
            raise ValueError("a bundle sum needs at least one summand")
        if len({b.genus for b in s}) != 1:
            raise ValueError("all summands must live on the same curve")

    @classmethod
    def of_degrees(cls, degrees: Sequence[int], genus: int = 0) -> "BundleSum":
        return cls(tuple(LineBundle(d, genus) for d in degrees))

    @property
    def genus(self) -> int:
        return self.summands[0].genus

    @property
    def rank(self) -> int:
        return len(self.summands)

    def serre_dual(self) -> "BundleSum":
        return BundleSum(tuple(b.serre_dual() for b in self.summands))


def h0(bundle: LineBundle) -> int:
    d, g = bundle.degree, bundle.genus
    if d < 0:
        return 0
    if g == 0:
        return d + 1
    if d > 2 * g - 2:
        return d + 1 - g
    raise IndeterminateError(
        f"h0 of a degree-{d} line bundle on a genus-{g} curve is "
        "indeterminate: requires bundle-specific data"
    )


def h0_sum(bundles: BundleSum) -> int:
    return sum(h0(b) for b in bundles.summands)


def euler_characteristic(bundles: BundleSum) -> int:
    return sum(b.degree + 1 - b.genus for b in bundles.summands)


def genus_complete_intersection(d1: int, d2: int) -> int:
    """Genus of a smooth complete intersection of degrees ``d1, d2`` in CP^3.

    Adjunction gives ``K = O(d1 + d2 - 4)`` restricted to the curve, of degree
    ``d1*d2*(d1+d2-4)``, and ``2g - 2 = deg K``.
    """
    if d1 < 1 or d2 < 1:
        raise ValueError("not a valid smooth complete intersection input: degrees must be positive")
    twice = 2 + d1 * d2 * (d1 + d2 - 4)
    if twice < 0 or twice % 2:
        raise ValueError("not a valid smooth complete intersection input")
    return twice // 2

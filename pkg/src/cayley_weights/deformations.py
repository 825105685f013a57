"""Infinitesimal conical complex and Cayley deformations of complex cones.

Conical deformations sit at weight 1.  Complex ones are holomorphic sections
of the normal bundle of the complex link (counted twice: real dimension).
The Cayley-but-not-complex ones live at modes ``-4 < m < 0`` and solve
``2 dbar^* dbar v = -m (4 + m) v``.

The twisted cubic link has a non-diagonal normal connection, so its extra
modes come from the coupled system on ``alpha_1``, a section of the
degree ``3m + 2`` bundle, with coupling constant ``a``:

    a_+ = (6m + 16) / (4 - 3m),   a_- = -2,

and ``2 dbar^* dbar alpha_1 = (8/3 + m)(4/3 + 4/a - m) alpha_1``.  The
constraint ``g_2 (omega_2 - i omega_3) = a alpha_1`` is taken as given.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exact import RationalLike, as_rational
from .profiles import DIAGONAL, TWISTED_CUBIC, ConeProfile, UnsupportedProfile
from .riemann_roch import BundleSum, LineBundle, h0, h0_sum
from .spectrum import SpectrumQuery, eigenvalue_membership
from .weights import LAPLACIAN, mode_range

DIAGONAL_LAPLACIAN = "diagonal-laplacian"
COUPLED_PLUS = "coupled-a-plus"
COUPLED_MINUS = "coupled-a-minus"

TWISTED_CUBIC_KAPPA = Fraction(8, 3)

ASSUMPTIONS = {
    TWISTED_CUBIC: (
        "coupling ansatz g2(omega2 - i omega3) = a alpha1 for a constant a",
        "normal coframe pulled back to zero on the link",
    ),
}


class DegenerateCoupling(ValueError):
    """The plus branch collapses to ``a = 0``."""


@dataclass(frozen=True)
class ExtraMode:
    mode: Fraction
    count: int
    mechanism: str


@dataclass(frozen=True)
class ConicalReport:
    complex_dim: int
    cayley_dim: int
    extra_modes: tuple[ExtraMode, ...] = field(default=())
    assumptions: tuple[str, ...] = field(default=())


@dataclass(frozen=True)
class CouplingParameter:
    value: Fraction
    branch: str

    def __post_init__(self):
        if self.branch not in ("plus", "minus"):
            raise ValueError(f"unknown branch {self.branch!r}")
        if self.branch == "minus" and self.value != -2:
            raise ValueError("the minus branch is a = -2")


def _check_third_integer(m: Fraction) -> None:
    if (3 * m).denominator != 1:
        raise ValueError(f"mode {m} is off the lattice 3m in Z")


def coupling_parameters(m: RationalLike) -> list[CouplingParameter]:
    m = as_rational(m)
    _check_third_integer(m)
    minus = CouplingParameter(Fraction(-2), "minus")
    if m == Fraction(4, 3):
        return [minus]
    a_plus = (6 * m + 16) / (4 - 3 * m)
    if a_plus == 0:
        raise DegenerateCoupling(f"degenerate coupling: a_+ = 0 at m = {m}")
    return [CouplingParameter(a_plus, "plus"), minus]


def coupling_residual(m: RationalLike, a: RationalLike) -> Fraction:
    """Left minus right side of the consistency equation for ``a``.

    ``(8/3 + m)(4/3 + 4/a - m) = (8/3 + a + m)(4/3 - m) - (4/3)(3m + 2)``
    """
    m, a = as_rational(m), as_rational(a)
    lhs = (Fraction(8, 3) + m) * (Fraction(4, 3) + 4 / a - m)
    rhs = (Fraction(8, 3) + a + m) * (Fraction(4, 3) - m) - Fraction(4, 3) * (3 * m + 2)
    return lhs - rhs


def coupled_target(m: RationalLike, a: RationalLike) -> Fraction:
    """Eigenvalue of ``2 dbar^* dbar`` demanded of ``alpha_1``."""
    m, a = as_rational(m), as_rational(a)
    return (Fraction(8, 3) + m) * (Fraction(4, 3) + 4 / a - m)


def twisted_cubic_coupled(m: RationalLike) -> list[ExtraMode]:
    """Solutions of the coupled system at mode ``m``, one entry per contributing branch."""
    m = as_rational(m)
    _check_third_integer(m)
    degree = int(3 * m + 2)
    query = SpectrumQuery(degree, TWISTED_CUBIC_KAPPA)
    try:
        branches = coupling_parameters(m)
    except DegenerateCoupling:
        # a = 0 removes the coupling; only the minus branch remains
        branches = [CouplingParameter(Fraction(-2), "minus")]
    out = []
    for p in branches:
        if coupling_residual(m, p.value) != 0:
            raise ArithmeticError(f"coupling a = {p.value} fails the consistency equation at m = {m}")
        target = coupled_target(m, p.value)
        mechanism = COUPLED_PLUS if p.branch == "plus" else COUPLED_MINUS
        if target < 0:
            continue
        if target == 0:
            count = h0(LineBundle(degree, 0))
        else:
            line = eigenvalue_membership(query, target)
            count = line.multiplicity if line is not None else 0
        if count:
            out.append(ExtraMode(m, count, mechanism))
    return out


def conical_complex_dimension(profile: ConeProfile) -> int:
    """Real dimension of infinitesimal conical complex deformations."""
    return 2 * h0_sum(BundleSum.of_degrees(profile.degrees(0), profile.genus))


def conical_cayley_dimension(profile: ConeProfile) -> ConicalReport:
    complex_dim = conical_complex_dimension(profile)
    extras: list[ExtraMode] = []
    if profile.connection == DIAGONAL:
        profile.require_diagonal()
        for n in mode_range(profile, 1):
            m = profile.mode(n)
            target = -m * (4 + m)
            count = 0
            for d in profile.degrees(n):
                line = eigenvalue_membership(SpectrumQuery(d, profile.kappa), target)
                if line is not None:
                    count += line.multiplicity
            if count:
                extras.append(ExtraMode(m, count, DIAGONAL_LAPLACIAN))
    elif profile.connection == TWISTED_CUBIC:
        for n in mode_range(profile, 1):
            extras += twisted_cubic_coupled(profile.mode(n))
    else:
        raise UnsupportedProfile(f"unknown connection {profile.connection!r}")
    cayley = complex_dim + sum(e.count for e in extras)
    return ConicalReport(complex_dim, cayley, tuple(extras), ASSUMPTIONS.get(profile.connection, ()))


__all__ = [
    "ConicalReport",
    "CouplingParameter",
    "DegenerateCoupling",
    "ExtraMode",
    "conical_cayley_dimension",
    "conical_complex_dimension",
    "coupled_target",
    "coupling_parameters",
    "coupling_residual",
    "twisted_cubic_coupled",
    "LAPLACIAN",
]

from fractions import Fraction

import pytest
import sympy

from cayley_weights.deformations import (
    COUPLED_MINUS,
    COUPLED_PLUS,
    DIAGONAL_LAPLACIAN,
    DegenerateCoupling,
    conical_cayley_dimension,
    conical_complex_dimension,
    coupled_target,
    coupling_parameters,
    coupling_residual,
    twisted_cubic_coupled,
)
from cayley_weights.profiles import C1, C2, C3

from oracles import spectrum_by_scan


@pytest.mark.parametrize("profile, cayley, complex_", [(C1, 12, 8), (C2, 22, 16), (C3, 30, 24)])
def test_conical_dimensions(profile, cayley, complex_):
    report = conical_cayley_dimension(profile)
    assert (report.cayley_dim, report.complex_dim) == (cayley, complex_)
    assert conical_complex_dimension(profile) == complex_


def test_extra_mode_witnesses():
    assert [(e.mode, e.count, e.mechanism) for e in conical_cayley_dimension(C1).extra_modes] == [
        (-2, 4, DIAGONAL_LAPLACIAN)
    ]
    assert [(e.mode, e.count) for e in conical_cayley_dimension(C2).extra_modes] == [(-2, 6)]
    c3 = conical_cayley_dimension(C3)
    assert [(e.mode, e.count, e.mechanism) for e in c3.extra_modes] == [
        (Fraction(-2, 3), 5, COUPLED_PLUS),
        (Fraction(-2, 3), 1, COUPLED_MINUS),
    ]
    assert c3.assumptions


def test_coupling_parameters_at_minus_two_thirds():
    assert [(p.value, p.branch) for p in coupling_parameters(Fraction(-2, 3))] == [(2, "plus"), (-2, "minus")]
    assert coupled_target(Fraction(-2, 3), 2) == 8
    assert coupled_target(Fraction(-2, 3), -2) == 0


def test_coupling_at_four_thirds_has_only_minus_branch():
    assert [(p.value, p.branch) for p in coupling_parameters(Fraction(4, 3))] == [(-2, "minus")]
    assert twisted_cubic_coupled(Fraction(4, 3)) == []


def test_degenerate_plus_branch():
    with pytest.raises(DegenerateCoupling, match="degenerate"):
        coupling_parameters(Fraction(-8, 3))
    assert sum(e.count for e in twisted_cubic_coupled(Fraction(-8, 3))) == 0


def test_off_lattice_mode():
    with pytest.raises(ValueError, match="lattice"):
        twisted_cubic_coupled(Fraction(1, 2))


def test_coupled_counts_over_the_window():
    for j in range(-11, 0):
        m = Fraction(j, 3)
        total = sum(e.count for e in twisted_cubic_coupled(m))
        assert total == (6 if j == -2 else 0), m


def test_plus_branch_identity_symbolically():
    m = sympy.Symbol("m")
    a = (6 * m + 16) / (4 - 3 * m)
    third = sympy.Rational(1, 3)
    lhs = (8 * third + m) * (4 * third + 4 / a - m)
    rhs = (8 * third + a + m) * (4 * third - m) - 4 * third * (3 * m + 2)
    assert sympy.simplify(sympy.together(lhs - rhs)) == 0
    for j in range(-11, 0):
        mj = sympy.Rational(j, 3)
        if a.subs(m, mj) == 0:
            continue
        assert (lhs - rhs).subs(m, mj) == 0


def test_minus_branch_identity_symbolically():
    m = sympy.Symbol("m")
    third = sympy.Rational(1, 3)
    a = -2
    lhs = (8 * third + m) * (4 * third + sympy.Rational(4, a) - m)
    rhs = (8 * third + a + m) * (4 * third - m) - 4 * third * (3 * m + 2)
    assert sympy.expand(lhs - rhs) == 0


def test_residual_matches_package():
    for j in range(-11, 0):
        for p in coupling_parameters(Fraction(j, 3)) if j != -8 else []:
            assert coupling_residual(Fraction(j, 3), p.value) == 0
    assert coupling_residual(Fraction(-2, 3), 1) != 0


def test_minus_one_mode_by_scan():
    # degree 3m + 2 = -1, kappa 8/3; neither branch target is an eigenvalue
    m = Fraction(-1)
    for p in coupling_parameters(m):
        t = coupled_target(m, p.value)
        if t > 0:
            assert spectrum_by_scan(-1, Fraction(8, 3), t, q_max=80) == []

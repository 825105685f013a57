import random
from fractions import Fraction

import pytest
import sympy

from cayley_weights.exact import QSqrt3
from cayley_weights.frames import (
    L3_CONSTANTS,
    ExteriorForm,
    MatrixForm,
    StructureConstants,
    beta_constraints,
    brace_matrix,
    cross_matrix,
    exterior_d,
    l3_frame,
    plus_minus_matrix,
    second_fundamental_form,
    structure_equation_residuals,
    verify_structure_equations,
    wedge,
)

W1, W2, W3 = (ExteriorForm.generator(i) for i in (1, 2, 3))
R3 = QSqrt3(0, 1)


def random_one_form(rng):
    return sum(
        (ExteriorForm.generator(i, Fraction(rng.randint(-9, 9), rng.randint(1, 5))) for i in (1, 2, 3)),
        ExteriorForm.zero(1),
    )


def coeffs(form):
    return [form.coefficient(i).a for i in (1, 2, 3)]


def test_wedge_basics():
    assert W1 ^ W2 == -(W2 ^ W1)
    assert not (W1 ^ W1)
    assert (W1 ^ W2 ^ W3).coefficient(1, 2, 3) == 1
    assert (W3 ^ W1 ^ W2).coefficient(1, 2, 3) == 1
    assert (W2 ^ W1 ^ W3).coefficient(1, 2, 3) == -1


def test_triple_wedge_is_determinant():
    rng = random.Random(7)
    for _ in range(50):
        a, b, c = (random_one_form(rng) for _ in range(3))
        det = sympy.Matrix([coeffs(a), coeffs(b), coeffs(c)]).det()
        top = wedge(wedge(a, b), c).coefficient(1, 2, 3)
        assert top == QSqrt3(Fraction(str(det)))


def test_graded_commutativity():
    rng = random.Random(11)
    for _ in range(50):
        a, b = random_one_form(rng), random_one_form(rng)
        two = a ^ b
        assert (a ^ b) == -(b ^ a)
        assert (two ^ a) == (a ^ two)


def test_d_on_generators_matches_brackets():
    expected = {
        1: (W2 ^ W3) * 2,
        2: (W1 ^ W3) * Fraction(-2, 3),
        3: (W1 ^ W2) * Fraction(2, 3),
    }
    for k, form in expected.items():
        assert exterior_d(ExteriorForm.generator(k)) == form


def test_d_squared_vanishes_on_random_forms():
    rng = random.Random(3)
    for _ in range(30):
        a = random_one_form(rng)
        assert not exterior_d(exterior_d(a))


def test_leibniz_rule():
    rng = random.Random(5)
    for _ in range(30):
        a, b = random_one_form(rng), random_one_form(rng)
        assert exterior_d(a ^ b) == (exterior_d(a) ^ b) - (a ^ exterior_d(b))


def test_jacobi_holds_for_l3():
    assert L3_CONSTANTS.jacobi_defect() == []


def test_jacobi_detects_bad_constants():
    # [e1,[e2,e3]] + [e2,[e3,e1]] + [e3,[e1,e2]] = e3
    bad = StructureConstants({(1, 2): {3: 1}, (1, 3): {1: 1}})
    assert bad.jacobi_defect() != []


def test_cross_matrix_shape():
    m = cross_matrix([W1, W2, W3])
    assert m.shape == (3, 3)
    assert m == -m.T
    assert m[0, 1] == W3 and m[1, 2] == W1 and m[2, 0] == W2


@pytest.mark.parametrize("sign", [1, -1])
def test_plus_minus_matrix_is_skew(sign):
    m = plus_minus_matrix([W1, W2, W3], sign)
    assert m.shape == (4, 4) and m == -m.T
    assert m[0, 3] == W3 * sign and m[2, 3] == W1 * -sign


def test_plus_minus_sign_checked():
    with pytest.raises(ValueError):
        plus_minus_matrix([W1, W2, W3], 0)


def test_brace_matrix_layout():
    p, q, r, s = (ExteriorForm.constant(v) for v in (1, 2, 3, 4))
    m = brace_matrix([p, q, r, s])
    assert m.shape == (4, 3)
    assert [[m[i, j].coefficient() for j in range(3)] for i in range(4)] == [
        [-2, -3, 4], [1, 4, 3], [-4, 1, -2], [3, -2, -1]
    ]


def test_second_fundamental_form_entries():
    h = second_fundamental_form()
    c = 2 / R3
    assert h[4, 2, 2] == c and h[4, 3, 3] == -c
    assert h[5, 2, 3] == c and h[5, 3, 2] == c
    assert all(h[a, 1, k] == 0 for a in range(4, 8) for k in (1, 2, 3))
    assert all(h[a, j, k] == h[a, k, j] for a in range(4, 8) for j in (1, 2, 3) for k in (1, 2, 3))


def test_asymmetric_h_detected():
    frame = l3_frame()
    zero = ExteriorForm.zero(1)
    frame.beta = MatrixForm([[zero, W3, zero], [zero] * 3, [zero] * 3, [zero] * 3])
    with pytest.raises(ArithmeticError, match="not symmetric"):
        second_fundamental_form(frame)


def test_beta_satisfies_constraints():
    assert not any(beta_constraints(l3_frame().beta))


def test_all_structure_equations_hold():
    report = verify_structure_equations()
    assert [c.name for c in report.checks] == ["tangent-coframe", "shape-operator", "tangent-curvature", "beta-derivative", "normal-curvature"]
    for check in report.checks:
        assert check.passed, (check.name, check.offending())
    assert report.passed


@pytest.mark.parametrize("a", [1, 3, Fraction(1, 2), 0])
def test_wrong_gamma_scale_fails(a):
    failed = [c.name for c in structure_equation_residuals(l3_frame(a)) if not c.passed]
    assert failed == ["normal-curvature"]


def test_opposite_gamma_scale_also_solves():
    assert all(c.passed for c in structure_equation_residuals(l3_frame(-2)))


def test_perturbed_beta_is_caught():
    frame = l3_frame()
    frame.beta = frame.beta.scale(2)
    assert not verify_structure_equations(frame).passed

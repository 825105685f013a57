"""Exterior calculus on the associative link ``SU(2)/Z_3`` and its structure equations.

Forms are left-invariant: constant ``Q(sqrt 3)`` combinations of wedge
products of the coframe ``omega_1, omega_2, omega_3``.  The exterior
derivative of a generator is fixed by the Lie bracket through the
Maurer-Cartan rule ``d omega_k(e_i, e_j) = -omega_k([e_i, e_j])``.

Normal coframe components are pulled back to zero on the link, so only the
intrinsic second structure equations are checked.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .exact import SQRT3, QSqrt3

DIM = 3


def _sort_with_sign(idx: Sequence[int]) -> tuple[int, tuple[int, ...]] | None:
    if len(set(idx)) != len(idx):
        return None
    arr = list(idx)
    sign = 1
    for i in range(len(arr)):
        for j in range(len(arr) - 1 - i):
            if arr[j] > arr[j + 1]:
                arr[j], arr[j + 1] = arr[j + 1], arr[j]
                sign = -sign
    return sign, tuple(arr)


class ExteriorForm:
    """A homogeneous form ``sum_I c_I omega_I`` with ``Q(sqrt 3)`` coefficients."""

    __slots__ = ("degree", "_terms")

    def __init__(self, degree: int, terms: Mapping[tuple[int, ...], object] | None = None):
        if not 0 <= degree <= DIM:
            raise ValueError(f"form degree {degree} outside 0..{DIM}")
        clean: dict[tuple[int, ...], QSqrt3] = {}
        for key, c in (terms or {}).items():
            if len(key) != degree or not all(1 <= i <= DIM for i in key):
                raise ValueError(f"basis index {key} does not fit a {degree}-form")
            res = _sort_with_sign(key)
            if res is None:
                continue
            sign, k = res
            value = clean.get(k, QSqrt3()) + QSqrt3.coerce(c) * sign
            if value:
                clean[k] = value
            else:
                clean.pop(k, None)
        self.degree = degree
        self._terms = clean

    @classmethod
    def zero(cls, degree: int) -> "ExteriorForm":
        return cls(degree)

    @classmethod
    def constant(cls, c) -> "ExteriorForm":
        return cls(0, {(): c})

    @classmethod
    def generator(cls, i: int, coefficient=1) -> "ExteriorForm":
        return cls(1, {(i,): coefficient})

    @property
    def terms(self) -> dict[tuple[int, ...], QSqrt3]:
        return dict(self._terms)

    def coefficient(self, *idx: int) -> QSqrt3:
        res = _sort_with_sign(idx)
        if res is None:
            return QSqrt3()
        sign, k = res
        return self._terms.get(k, QSqrt3()) * sign

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def _check_same_degree(self, other: "ExteriorForm"):
        if self.degree != other.degree and self and other:
            raise ValueError(f"cannot add a {self.degree}-form and a {other.degree}-form")

    def __add__(self, other):
        if not isinstance(other, ExteriorForm):
            return NotImplemented
        self._check_same_degree(other)
        degree = self.degree if self else other.degree
        terms = dict(self._terms)
        for k, c in other._terms.items():
            terms[k] = terms.get(k, QSqrt3()) + c
        return ExteriorForm(degree, terms)

    def __neg__(self):
        return ExteriorForm(self.degree, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, ExteriorForm):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "ExteriorForm":
        c = QSqrt3.coerce(c)
        return ExteriorForm(self.degree, {k: v * c for k, v in self._terms.items()})

    def __mul__(self, c):
        if isinstance(c, ExteriorForm):
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def __xor__(self, other):
        return wedge(self, other)

    def __eq__(self, other):
        if not isinstance(other, ExteriorForm):
            return NotImplemented
        if not self and not other:
            return True
        return self.degree == other.degree and self._terms == other._terms

    def __hash__(self):
        return hash((self.degree, frozenset(self._terms.items())))

    def __repr__(self):
        if not self._terms:
            return f"0[{self.degree}]"
        parts = []
        for k in sorted(self._terms):
            basis = "w" + "".join(map(str, k)) if k else "1"
            parts.append(f"({self._terms[k]})*{basis}")
        return " + ".join(parts)


def wedge(x: ExteriorForm, y: ExteriorForm) -> ExteriorForm:
    degree = x.degree + y.degree
    if degree > DIM:
        raise ValueError(f"wedge of a {x.degree}-form and a {y.degree}-form exceeds degree {DIM}")
    terms: dict[tuple[int, ...], QSqrt3] = {}
    for kx, cx in x._terms.items():
        for ky, cy in y._terms.items():
            res = _sort_with_sign(kx + ky)
            if res is None:
                continue
            sign, k = res
            terms[k] = terms.get(k, QSqrt3()) + cx * cy * sign
    return ExteriorForm(degree, terms)


@dataclass(frozen=True)
class StructureConstants:
    """Brackets ``[e_i, e_j] = sum_k c[(i, j)][k] e_k`` for ``i < j``."""

    brackets: Mapping[tuple[int, int], Mapping[int, Fraction]] = field(default_factory=dict)

    def bracket(self, i: int, j: int) -> dict[int, Fraction]:
        if i == j:
            return {}
        if i < j:
            return dict(self.brackets.get((i, j), {}))
        return {k: -c for k, c in self.brackets.get((j, i), {}).items()}

    def c(self, k: int, i: int, j: int) -> Fraction:
        return Fraction(self.bracket(i, j).get(k, 0))

    def jacobi_defect(self) -> list[tuple[int, int, int, int, Fraction]]:
        """Nonzero components of ``[[a,b],c] + [[b,c],a] + [[c,a],b]``."""

        def br(u: dict[int, Fraction], v: dict[int, Fraction]) -> dict[int, Fraction]:
            out: dict[int, Fraction] = {}
            for i, ci in u.items():
                for j, cj in v.items():
                    for k, ck in self.bracket(i, j).items():
                        out[k] = out.get(k, Fraction(0)) + ci * cj * ck
            return out

        bad = []
        for a, b, c in combinations(range(1, DIM + 1), 3):
            ea, eb, ec = ({a: Fraction(1)}, {b: Fraction(1)}, {c: Fraction(1)})
            total: dict[int, Fraction] = {}
            for term in (br(br(ea, eb), ec), br(br(eb, ec), ea), br(br(ec, ea), eb)):
                for k, v in term.items():
                    total[k] = total.get(k, Fraction(0)) + v
            bad += [(a, b, c, k, v) for k, v in total.items() if v]
        return bad


L3_CONSTANTS = StructureConstants(
    {
        (1, 2): {3: Fraction(-2, 3)},
        (1, 3): {2: Fraction(2, 3)},
        (2, 3): {1: Fraction(-2)},
    }
)


def exterior_d(x: ExteriorForm, sc: StructureConstants = L3_CONSTANTS) -> ExteriorForm:
    """Exterior derivative of a left-invariant form."""
    if x.degree >= DIM:
        raise ValueError("d of a top-degree form is not needed here")
    if x.degree == 0:
        return ExteriorForm.zero(1)

    def d_generator(k: int) -> ExteriorForm:
        return ExteriorForm(
            2, {(i, j): -sc.c(k, i, j) for i, j in combinations(range(1, DIM + 1), 2)}
        )

    out = ExteriorForm.zero(x.degree + 1)
    for key, c in x.terms.items():
        # Leibniz: d(w_i1 ^ ... ^ w_ip) = sum (-1)^s w_i1 ^ .. d w_is .. ^ w_ip
        for s, k in enumerate(key):
            left = ExteriorForm(s, {key[:s]: 1})
            right = ExteriorForm(len(key) - s - 1, {key[s + 1 :]: 1})
            piece = wedge(wedge(left, d_generator(k)), right)
            out = out + piece.scale(c * (-1) ** s)
    return out


class MatrixForm:
    """A rectangular grid of forms of one degree."""

    def __init__(self, entries: Sequence[Sequence[ExteriorForm]]):
        rows = [list(r) for r in entries]
        if not rows or not rows[0]:
            raise ValueError("a matrix form needs at least one entry")
        if len({len(r) for r in rows}) != 1:
            raise ValueError("ragged matrix")
        degrees = {e.degree for r in rows for e in r if e}
        if len(degrees) > 1:
            raise ValueError(f"mixed entry degrees {sorted(degrees)}")
        self.degree = degrees.pop() if degrees else rows[0][0].degree
        self.entries = [[e if e else ExteriorForm.zero(self.degree) for e in r] for r in rows]

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.entries), len(self.entries[0])

    @classmethod
    def zeros(cls, rows: int, cols: int, degree: int = 1) -> "MatrixForm":
        return cls([[ExteriorForm.zero(degree) for _ in range(cols)] for _ in range(rows)])

    def __getitem__(self, ij: tuple[int, int]) -> ExteriorForm:
        i, j = ij
        return self.entries[i][j]

    def transpose(self) -> "MatrixForm":
        r, c = self.shape
        return MatrixForm([[self.entries[i][j] for i in range(r)] for j in range(c)])

    @property
    def T(self) -> "MatrixForm":
        return self.transpose()

    def _zip(self, other: "MatrixForm", op) -> "MatrixForm":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        return MatrixForm(
            [[op(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)]
        )

    def __add__(self, other):
        return self._zip(other, lambda a, b: a + b)

    def __sub__(self, other):
        return self._zip(other, lambda a, b: a - b)

    def __neg__(self):
        return MatrixForm([[-e for e in r] for r in self.entries])

    def scale(self, c) -> "MatrixForm":
        return MatrixForm([[e.scale(c) for e in r] for r in self.entries])

    def __mul__(self, c):
        return self.scale(c)

    __rmul__ = __mul__

    def wedge(self, other: "MatrixForm") -> "MatrixForm":
        r, n = self.shape
        n2, c = other.shape
        if n != n2:
            raise ValueError(f"cannot wedge {self.shape} by {other.shape}")
        degree = self.degree + other.degree
        out = []
        for i in range(r):
            row = []
            for j in range(c):
                acc = ExteriorForm.zero(degree)
                for k in range(n):
                    acc = acc + wedge(self.entries[i][k], other.entries[k][j])
                row.append(acc)
            out.append(row)
        return MatrixForm(out)

    def d(self, sc: StructureConstants = L3_CONSTANTS) -> "MatrixForm":
        return MatrixForm([[exterior_d(e, sc) for e in r] for r in self.entries])

    def nonzero_entries(self) -> list[tuple[int, int, ExteriorForm]]:
        return [(i, j, e) for i, r in enumerate(self.entries) for j, e in enumerate(r) if e]

    def is_zero(self) -> bool:
        return not self.nonzero_entries()

    def __eq__(self, other):
        if not isinstance(other, MatrixForm):
            return NotImplemented
        return self.shape == other.shape and (self - other).is_zero()

    def __repr__(self):
        return "MatrixForm(" + repr(self.entries) + ")"


def _forms(values: Iterable, n: int, name: str) -> list[ExteriorForm]:
    values = list(values)
    if len(values) != n:
        raise ValueError(f"{name} takes a {n}-vector, got length {len(values)}")
    out = []
    for v in values:
        out.append(v if isinstance(v, ExteriorForm) else ExteriorForm.constant(v))
    return out


def cross_matrix(v) -> MatrixForm:
    """``[(x, y, z)]``: the 3x3 skew matrix of the cross product."""
    x, y, z = _forms(v, 3, "[.]")
    return MatrixForm([[-x * 0, z, -y], [-z, x * 0, x], [y, -x, z * 0]])


def plus_minus_matrix(v, sign: int) -> MatrixForm:
    """``[(x, y, z)]_+`` for ``sign = +1`` and ``[(x, y, z)]_-`` for ``sign = -1``."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    x, y, z = _forms(v, 3, "[.]+-")
    o = x * 0
    s = sign
    return MatrixForm(
        [
            [o, -x, -y, z * s],
            [x, o, z, y * s],
            [y, -z, o, x * -s],
            [z * -s, y * -s, x * s, o],
        ]
    )


def brace_matrix(v) -> MatrixForm:
    """``{(p, q, r, s)}``: the 4x3 matrix pairing normal and tangent directions."""
    p, q, r, s = _forms(v, 4, "{.}")
    return MatrixForm(
        [
            [-q, -r, s],
            [p, s, r],
            [-s, p, -q],
            [r, -q, -p],
        ]
    )


def column(forms: Sequence[ExteriorForm]) -> MatrixForm:
    return MatrixForm([[f] for f in forms])


@dataclass
class FrameData:
    """Connection data of the adapted frame along the link."""

    omega: list[ExteriorForm]
    alpha: list[ExteriorForm]
    gamma: list[ExteriorForm]
    beta: MatrixForm  # rows a = 4..7, columns j = 1..3


def l3_frame(gamma_scale=2) -> FrameData:
    """Frame data of the twisted-cubic link.

    ``gamma_scale`` is the constant in ``gamma_2 = a omega_2, gamma_3 = a omega_3``;
    only ``a = 2`` satisfies every equation.
    """
    w1, w2, w3 = (ExteriorForm.generator(i) for i in (1, 2, 3))
    c = 2 / SQRT3
    zero = ExteriorForm.zero(1)
    beta = MatrixForm(
        [
            [zero, w2 * c, -w3 * c],
            [zero, w3 * c, w2 * c],
            [zero, zero, zero],
            [zero, zero, zero],
        ]
    )
    return FrameData(
        omega=[w1, w2, w3],
        alpha=[w1 * Fraction(-1, 3), w2, w3],
        gamma=[w1 * Fraction(2, 3), w2 * gamma_scale, w3 * gamma_scale],
        beta=beta,
    )


def beta_constraints(beta: MatrixForm) -> list[ExteriorForm]:
    """The four linear relations a spin(7)-valued beta must satisfy."""

    def b(a: int, j: int) -> ExteriorForm:
        return beta[a - 4, j - 1]

    return [
        b(4, 1) + b(7, 2) + b(6, 3),
        b(5, 1) + b(6, 2) - b(7, 3),
        b(6, 1) - b(5, 2) - b(4, 3),
        b(7, 1) - b(4, 2) + b(5, 3),
    ]


def second_fundamental_form(frame: FrameData | None = None) -> dict[tuple[int, int, int], QSqrt3]:
    """``h[a, j, k]`` with ``beta^a_j = sum_k h^a_{jk} omega_k``; raises if asymmetric."""
    frame = frame or l3_frame()
    h: dict[tuple[int, int, int], QSqrt3] = {}
    for a in range(4, 8):
        for j in range(1, 4):
            entry = frame.beta[a - 4, j - 1]
            for k in range(1, 4):
                h[a, j, k] = entry.coefficient(k)
    for a in range(4, 8):
        for j in range(1, 4):
            for k in range(j + 1, 4):
                if h[a, j, k] != h[a, k, j]:
                    raise ArithmeticError(
                        f"second fundamental form not symmetric: h^{a}_{j}{k} = {h[a, j, k]}"
                        f" but h^{a}_{k}{j} = {h[a, k, j]}"
                    )
    return h


@dataclass
class EquationCheck:
    name: str
    equation: str
    residual: MatrixForm

    @property
    def passed(self) -> bool:
        return self.residual.is_zero()

    def offending(self) -> list[tuple[int, int, ExteriorForm]]:
        return self.residual.nonzero_entries()


def structure_equation_residuals(
    frame: FrameData | None = None, sc: StructureConstants = L3_CONSTANTS
) -> list[EquationCheck]:
    """Left minus right side of each second structure equation."""
    frame = frame or l3_frame(2)
    omega = column(frame.omega)
    alpha_m = cross_matrix(frame.alpha)
    alpha_minus_omega = [a - w for a, w in zip(frame.alpha, frame.omega)]
    plus = plus_minus_matrix(alpha_minus_omega, 1)
    minus = plus_minus_matrix(frame.gamma, -1)
    beta = frame.beta
    normal = plus + minus

    h = second_fundamental_form(frame)
    h_omega = MatrixForm(
        [
            [sum((frame.omega[k - 1] * h[a, j, k] for k in range(1, 4)), ExteriorForm.zero(1)) for j in range(1, 4)]
            for a in range(4, 8)
        ]
    )

    return [
        EquationCheck("tangent-coframe", "d omega = -[alpha] ^ omega", omega.d(sc) + alpha_m.wedge(omega)),
        EquationCheck("shape-operator", "beta = h omega", beta - h_omega),
        EquationCheck(
            "tangent-curvature",
            "d[alpha] = -[alpha]^[alpha] + omega^omega^T + beta^T^beta",
            alpha_m.d(sc)
            - (-alpha_m.wedge(alpha_m) + omega.wedge(omega.T) + beta.T.wedge(beta)),
        ),
        EquationCheck(
            "beta-derivative",
            "d beta = -beta^[alpha] - 1/2([alpha-omega]_+ + [gamma]_-)^beta",
            beta.d(sc) - (-beta.wedge(alpha_m) - normal.scale(Fraction(1, 2)).wedge(beta)),
        ),
        EquationCheck(
            "normal-curvature",
            "1/2 d([alpha-omega]_+ + [gamma]_-) = -1/4 [alpha-omega]_+^[alpha-omega]_+"
            " - 1/4 [gamma]_-^[gamma]_- + beta^beta^T",
            normal.d(sc).scale(Fraction(1, 2))
            - (
                plus.wedge(plus).scale(Fraction(-1, 4))
                + minus.wedge(minus).scale(Fraction(-1, 4))
                + beta.wedge(beta.T)
            ),
        ),
    ]


@dataclass
class FrameVerification:
    checks: list[EquationCheck]
    d_squared: list[ExteriorForm]
    jacobi_defect: list
    constraints: list[ExteriorForm]
    traces: dict[int, QSqrt3]

    @property
    def passed(self) -> bool:
        return (
            all(c.passed for c in self.checks)
            and not any(self.d_squared)
            and not self.jacobi_defect
            and not any(self.constraints)
            and not any(self.traces.values())
        )


def verify_structure_equations(
    frame: FrameData | None = None, sc: StructureConstants = L3_CONSTANTS
) -> FrameVerification:
    frame = frame or l3_frame(2)
    checks = structure_equation_residuals(frame, sc)
    d_squared = [exterior_d(exterior_d(ExteriorForm.generator(i), sc), sc) for i in (1, 2, 3)]
    h = second_fundamental_form(frame)
    traces = {a: sum((h[a, j, j] for j in (1, 2, 3)), QSqrt3()) for a in range(4, 8)}
    return FrameVerification(checks, d_squared, sc.jacobi_defect(), beta_constraints(frame.beta), traces)

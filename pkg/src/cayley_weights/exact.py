"""Exact scalars: rationals, Q(sqrt 3), quadratic-surd weights and Bernoulli data.

Rationals are :class:`fractions.Fraction` throughout.  Everything here is
immutable and exact; nothing ever touches a float.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

Rational = Fraction
RationalLike = Union[int, Fraction, str]

__all__ = [
    "Rational",
    "QSqrt3",
    "QuadraticWeight",
    "as_rational",
    "format_rational",
    "parse_rational",
    "sqrt_exact",
    "cmp",
    "bernoulli_numbers",
    "bernoulli_polynomial",
    "zeta_nonpositive",
    "hurwitz_nonpositive",
]


def as_rational(x: RationalLike) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``; decimals and exponents are refused."""
    s = text.strip().replace("−", "-")
    num, sep, den = s.partition("/")
    try:
        p = int(num)
        q = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"not an exact rational: {text!r}") from None
    if q == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    return Fraction(p, q)


def format_rational(x: RationalLike) -> str:
    x = as_rational(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def cmp(x: RationalLike, y: RationalLike) -> int:
    """Three-way comparison: -1, 0 or 1."""
    x, y = as_rational(x), as_rational(y)
    return (x > y) - (x < y)


def sqrt_exact(r: RationalLike) -> Fraction | None:
    """The rational square root of ``r`` if it has one, else ``None``."""
    r = as_rational(r)
    if r < 0:
        raise ValueError(f"square root of negative rational {r}")
    p, q = r.numerator, r.denominator
    sp, sq = math.isqrt(p), math.isqrt(q)
    if sp * sp == p and sq * sq == q:
        return Fraction(sp, sq)
    return None


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def _cmp_sqrt(r: Fraction, c: Fraction) -> int:
    """Sign of sqrt(r) - c for r >= 0."""
    if c < 0:
        return 1
    return cmp(r, c * c)


@dataclass(frozen=True)
class QSqrt3:
    """An element ``a + b*sqrt(3)`` of Q(sqrt 3)."""

    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "a", as_rational(self.a))
        object.__setattr__(self, "b", as_rational(self.b))

    @classmethod
    def coerce(cls, x) -> "QSqrt3":
        if isinstance(x, QSqrt3):
            return x
        return cls(as_rational(x), Fraction(0))

    def __add__(self, other):
        try:
            o = QSqrt3.coerce(other)
        except TypeError:
            return NotImplemented
        return QSqrt3(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return QSqrt3(-self.a, -self.b)

    def __sub__(self, other):
        try:
            o = QSqrt3.coerce(other)
        except TypeError:
            return NotImplemented
        return QSqrt3(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            o = QSqrt3.coerce(other)
        except TypeError:
            return NotImplemented
        return QSqrt3(self.a * o.a + 3 * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def conjugate(self) -> "QSqrt3":
        return QSqrt3(self.a, -self.b)

    def norm(self) -> Fraction:
        return self.a * self.a - 3 * self.b * self.b

    def inverse(self) -> "QSqrt3":
        n = self.norm()
        if n == 0:
            # a^2 = 3 b^2 has no rational solution except 0
            raise ZeroDivisionError("inverse of zero in Q(sqrt 3)")
        c = self.conjugate()
        return QSqrt3(c.a / n, c.b / n)

    def __truediv__(self, other):
        try:
            o = QSqrt3.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return QSqrt3.coerce(other) * self.inverse()

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __eq__(self, other):
        if isinstance(other, QSqrt3):
            return self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    def is_rational(self) -> bool:
        return self.b == 0

    def __str__(self):
        if self.b == 0:
            return format_rational(self.a)
        surd = f"{format_rational(self.b)}*sqrt3"
        if self.a == 0:
            return surd
        return f"{format_rational(self.a)}+{surd}".replace("+-", "-")

    def __repr__(self):
        return f"QSqrt3({self})"

    def to_json(self) -> dict:
        return {"a": format_rational(self.a), "b": format_rational(self.b)}


SQRT3 = QSqrt3(0, 1)


@dataclass(frozen=True, eq=False)
class QuadraticWeight:
    """A weight ``-1 + sign*sqrt(radicand)``.

    Radicand-zero weights are normalised to ``sign = +1`` so that every real
    number of this shape has exactly one representation.
    """

    sign: int
    radicand: Fraction

    def __post_init__(self):
        r = as_rational(self.radicand)
        if r < 0:
            raise ValueError(f"negative radicand {r}")
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")
        object.__setattr__(self, "radicand", r)
        if r == 0:
            object.__setattr__(self, "sign", 1)

    @classmethod
    def from_rational(cls, value: RationalLike) -> "QuadraticWeight":
        u = as_rational(value) + 1
        return cls(-1 if u < 0 else 1, u * u)

    @property
    def root(self) -> Fraction | None:
        return sqrt_exact(self.radicand)

    def is_rational(self) -> bool:
        return self.root is not None

    def to_rational(self) -> Fraction:
        s = self.root
        if s is None:
            raise ValueError(f"{self} is irrational")
        return -1 + self.sign * s

    def is_integer(self) -> bool:
        s = self.root
        return s is not None and s.denominator == 1

    def _offset_cmp(self, other: "QuadraticWeight") -> int:
        # compare sign*sqrt(r) exactly
        if self.sign != other.sign:
            if self.radicand == 0 and other.radicand == 0:
                return 0
            return cmp(self.sign, other.sign)
        return self.sign * cmp(self.radicand, other.radicand)

    def cmp_rational(self, c: RationalLike) -> int:
        """Sign of ``self - c``."""
        u = as_rational(c) + 1
        if self.sign > 0:
            return _cmp_sqrt(self.radicand, u)
        return -_cmp_sqrt(self.radicand, -u)

    def __eq__(self, other):
        if isinstance(other, QuadraticWeight):
            return self._offset_cmp(other) == 0
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.cmp_rational(other) == 0
        return NotImplemented

    def __hash__(self):
        s = self.root
        if s is not None:
            return hash(-1 + self.sign * s)
        return hash((self.sign, self.radicand))

    def __lt__(self, other):
        if isinstance(other, QuadraticWeight):
            return self._offset_cmp(other) < 0
        return self.cmp_rational(other) < 0

    def __le__(self, other):
        return self == other or self < other

    def __gt__(self, other):
        if isinstance(other, QuadraticWeight):
            return self._offset_cmp(other) > 0
        return self.cmp_rational(other) > 0

    def __ge__(self, other):
        return self == other or self > other

    def __float__(self):
        return -1.0 + self.sign * math.sqrt(self.radicand)

    def __str__(self):
        if self.is_rational():
            return format_rational(self.to_rational())
        op = "+" if self.sign > 0 else "-"
        return f"-1{op}sqrt({format_rational(self.radicand)})"

    def __repr__(self):
        return f"QuadraticWeight({self})"

    def to_json(self) -> dict:
        return {"base": "-1", "sign": self.sign, "radicand": format_rational(self.radicand)}

    @classmethod
    def from_json(cls, data: dict) -> "QuadraticWeight":
        if data.get("base") != "-1":
            raise ValueError(f"unexpected weight base {data.get('base')!r}")
        return cls(int(data["sign"]), parse_rational(data["radicand"]))


@lru_cache(maxsize=None)
def _bernoulli(n: int) -> tuple[Fraction, ...]:
    # sum_{k<=m} C(m+1, k) B_k = 0, which gives B_1 = -1/2
    b = [Fraction(1)]
    for m in range(1, n + 1):
        acc = sum(math.comb(m + 1, k) * b[k] for k in range(m))
        b.append(-acc / (m + 1))
    return tuple(b)


def bernoulli_numbers(n: int) -> tuple[Fraction, ...]:
    """``(B_0, ..., B_n)`` with the convention ``B_1 = -1/2``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _bernoulli(n)


def bernoulli_polynomial(n: int, x: RationalLike) -> Fraction:
    x = as_rational(x)
    b = bernoulli_numbers(n)
    return sum((math.comb(n, k) * b[k] * x ** (n - k) for k in range(n + 1)), Fraction(0))


def zeta_nonpositive(n: int) -> Fraction:
    """Riemann zeta at ``-n``: ``(-1)^n B_{n+1}/(n+1)``.

    The sign factor matters only at ``n = 0`` under the ``B_1 = -1/2``
    convention; for odd ``n + 1 > 1`` the Bernoulli number vanishes.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return (-1) ** n * bernoulli_numbers(n + 1)[n + 1] / (n + 1)


def hurwitz_nonpositive(n: int, a: RationalLike) -> Fraction:
    """Hurwitz zeta at ``s = -n``: ``-B_{n+1}(a)/(n+1)`` for ``a > 0``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    a = as_rational(a)
    if a <= 0:
        raise ValueError(f"Hurwitz parameter must be positive, got {a}")
    return -bernoulli_polynomial(n + 1, a) / (n + 1)

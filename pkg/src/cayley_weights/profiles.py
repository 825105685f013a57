"""Complex cones in C^4 described through their complex link.

A profile records what the weight and deformation computations need about a
cone: the genus and scalar curvature of the complex link, the lattice of
admissible Fourier modes ``m = n / k`` along the Reeb field, and the normal
bundle as a sum of line bundles whose degree at lattice index ``n`` is
``slope * n + offset``.

Profiles round-trip through a small TOML document::

    name = "c2"
    genus = 0
    kappa = "4"
    lattice_denominator = 1
    connection = "diagonal"

    [[summand]]
    slope = 2
    offset = 2

    [[summand]]
    slope = 2
    offset = 4

``kappa`` is a ``"p/q"`` string so that it stays exact.  Unknown keys are
rejected.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from .exact import as_rational, format_rational, parse_rational

DIAGONAL = "diagonal"
TWISTED_CUBIC = "twisted_cubic"
CONNECTIONS = (DIAGONAL, TWISTED_CUBIC)


class ProfileError(ValueError):
    """A profile document is malformed."""


class UnsupportedProfile(ValueError):
    """The requested computation does not apply to this profile."""


@dataclass(frozen=True)
class DegreeFamily:
    slope: int
    offset: int

    def __post_init__(self):
        if self.slope < 1:
            raise ValueError(f"slope must be at least 1, got {self.slope}")

    def degree(self, n: int) -> int:
        return self.slope * n + self.offset


@dataclass(frozen=True)
class ConeProfile:
    name: str
    genus: int
    kappa: Fraction
    lattice_denominator: int
    summands: tuple[DegreeFamily, ...]
    connection: str = DIAGONAL

    def __post_init__(self):
        object.__setattr__(self, "kappa", as_rational(self.kappa))
        object.__setattr__(self, "summands", tuple(self.summands))
        if self.genus < 0:
            raise ValueError("genus must be nonnegative")
        if self.kappa <= 0:
            raise ValueError("kappa must be positive")
        if self.lattice_denominator < 1:
            raise ValueError("lattice_denominator must be a positive integer")
        if not self.summands:
            raise ValueError("a profile needs at least one summand")
        if self.connection not in CONNECTIONS:
            raise ValueError(f"connection must be one of {CONNECTIONS}, got {self.connection!r}")
        if self.connection == TWISTED_CUBIC and (
            self.lattice_denominator != 3
            or self.genus != 0
            or self.summands != (DegreeFamily(1, 5), DegreeFamily(1, 5))
        ):
            raise ValueError("the twisted_cubic connection only describes the fixed C3 geometry")

    def mode(self, n: int) -> Fraction:
        return Fraction(n, self.lattice_denominator)

    def index_of(self, m) -> int | None:
        """Lattice index of mode ``m``, or ``None`` if ``m`` is off the lattice."""
        x = as_rational(m) * self.lattice_denominator
        return int(x) if x.denominator == 1 else None

    def degrees(self, n: int) -> list[int]:
        return [f.degree(n) for f in self.summands]

    def require_diagonal(self) -> None:
        if self.connection != DIAGONAL:
            raise UnsupportedProfile(
                f"profile {self.name!r} has a {self.connection} connection: use twisted_cubic solver"
            )
        if self.genus != 0:
            raise UnsupportedProfile(
                f"profile {self.name!r} has genus {self.genus}: spectral counting needs a rational link"
            )

    def to_toml(self) -> str:
        lines = [
            f'name = "{self.name}"',
            f"genus = {self.genus}",
            f'kappa = "{format_rational(self.kappa)}"',
            f"lattice_denominator = {self.lattice_denominator}",
            f'connection = "{self.connection}"',
        ]
        for f in self.summands:
            lines += ["", "[[summand]]", f"slope = {f.slope}", f"offset = {f.offset}"]
        return "\n".join(lines) + "\n"


C1 = ConeProfile("c1", 0, Fraction(8), 1, (DegreeFamily(1, 1), DegreeFamily(1, 1)))
C2 = ConeProfile("c2", 0, Fraction(4), 1, (DegreeFamily(2, 2), DegreeFamily(2, 4)))
C3 = ConeProfile(
    "c3", 0, Fraction(8, 3), 3, (DegreeFamily(1, 5), DegreeFamily(1, 5)), TWISTED_CUBIC
)
BUILTINS = {p.name: p for p in (C1, C2, C3)}

_TOP_KEYS = {"name", "genus", "kappa", "lattice_denominator", "connection", "summand"}
_SUMMAND_KEYS = {"slope", "offset"}


def builtin(name: str) -> ConeProfile:
    try:
        return BUILTINS[name.lower()]
    except KeyError:
        raise ProfileError(f"unknown builtin profile {name!r}; choose from {sorted(BUILTINS)}") from None


def _int_field(table: dict, key: str, where: str) -> int:
    value = table.get(key)
    if not isinstance(value, int) or isinstance(value, bool):
        raise ProfileError(f"{where}: {key!r} must be an integer")
    return value


def parse_profile(text: str) -> ConeProfile:
    try:
        doc = tomllib.loads(text)
    except tomllib.TOMLDecodeError as exc:
        # the message carries "(at line L, column C)"
        raise ProfileError(f"parse error: {exc}") from None
    unknown = set(doc) - _TOP_KEYS
    if unknown:
        raise ProfileError(f"unknown keys: {sorted(unknown)}")
    missing = _TOP_KEYS - set(doc)
    if missing:
        raise ProfileError(f"missing keys: {sorted(missing)}")
    if not isinstance(doc["name"], str) or not isinstance(doc["connection"], str):
        raise ProfileError("'name' and 'connection' must be strings")
    if not isinstance(doc["kappa"], str):
        raise ProfileError("'kappa' must be a rational string such as \"8/3\"")
    try:
        kappa = parse_rational(doc["kappa"])
    except (ValueError, ZeroDivisionError) as exc:
        raise ProfileError(str(exc)) from None
    summands = []
    blocks = doc["summand"]
    if not isinstance(blocks, list):
        raise ProfileError("'summand' must be an array of tables ([[summand]])")
    for i, block in enumerate(blocks):
        extra = set(block) - _SUMMAND_KEYS
        if extra:
            raise ProfileError(f"summand {i}: unknown keys {sorted(extra)}")
        where = f"summand {i}"
        try:
            summands.append(DegreeFamily(_int_field(block, "slope", where), _int_field(block, "offset", where)))
        except ValueError as exc:
            raise ProfileError(f"{where}: {exc}") from None
    try:
        return ConeProfile(
            name=doc["name"],
            genus=_int_field(doc, "genus", "profile"),
            kappa=kappa,
            lattice_denominator=_int_field(doc, "lattice_denominator", "profile"),
            summands=tuple(summands),
            connection=doc["connection"],
        )
    except ProfileError:
        raise
    except ValueError as exc:
        raise ProfileError(str(exc)) from None


def load_profile(path) -> ConeProfile:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ProfileError(f"cannot read profile {str(path)!r}: {exc.strerror}") from None
    return parse_profile(text)

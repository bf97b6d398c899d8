"""Finite Weyl and dihedral Coxeter types: parsing, degrees, orders.

Type strings follow the grammar::

    Spec   := "1" | Factor ( "x" Factor )*
    Factor := ("A"|"B"|"C"|"D") INT | "E" ("6"|"7"|"8") | "F4" | "G2" | "I2(" INT ")"

Whitespace is ignored and letters are case-insensitive. ``C_n`` is stored as
``B_n``; the trivial group is the empty spec, spelled ``"1"``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import reduce
from typing import Iterable

from .polyring import IntPolynomial, poly_mul, q_integer

__all__ = [
    "IrreducibleType",
    "WeylSpec",
    "SpecError",
    "SpecSyntaxError",
    "parse_type_spec",
    "degrees",
    "group_order",
    "poincare_polynomial",
    "is_weyl",
    "EXCEPTIONAL",
]

FAMILIES = ("A", "B", "C", "D", "E", "F", "G", "I2")
EXCEPTIONAL = frozenset("EFG")


class SpecError(ValueError):
    """Invalid Weyl type data (bad family, rank out of range, ...)."""


class SpecSyntaxError(SpecError):
    def __init__(self, message: str, text: str, position: int):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position} in {text!r}")


@dataclass(frozen=True, order=True)
class IrreducibleType:
    """One irreducible factor. ``rank`` is the Coxeter rank; I2 carries ``m``."""

    family: str
    rank: int
    m: int | None = None

    def __post_init__(self):
        fam = self.family.upper() if isinstance(self.family, str) else self.family
        if fam not in FAMILIES:
            raise SpecError(f"unknown family {self.family!r}")
        if not isinstance(self.rank, int) or isinstance(self.rank, bool):
            raise SpecError("rank must be an integer")
        if fam == "C":
            fam = "B"
        object.__setattr__(self, "family", fam)
        r = self.rank
        if fam == "A":
            ok = r >= 1
        elif fam in ("B", "D"):
            ok = r >= 2
        elif fam == "E":
            ok = r in (6, 7, 8)
        elif fam == "F":
            ok = r == 4
        elif fam == "G":
            ok = r == 2
        else:
            ok = r == 2
        if not ok:
            raise SpecError(f"rank {r} out of range for family {fam}")
        if fam == "I2":
            if self.m is None or self.m < 3:
                raise SpecError(f"I2(m) needs m >= 3, got {self.m}")
        elif self.m is not None:
            raise SpecError(f"family {fam} takes no dihedral parameter")

    def __str__(self):
        if self.family == "I2":
            return f"I2({self.m})"
        return f"{self.family}{self.rank}"

    @property
    def is_exceptional(self) -> bool:
        return self.family in EXCEPTIONAL

    @property
    def coxeter_m(self) -> int | None:
        """Order of the product of the two generators for rank-2 dihedral types."""
        if self.family == "I2":
            return self.m
        if self.family == "G":
            return 6
        return None


@dataclass(frozen=True)
class WeylSpec:
    factors: tuple[IrreducibleType, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))

    def __str__(self):
        if not self.factors:
            return "1"
        return "x".join(str(t) for t in self.factors)

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)

    @property
    def rank(self) -> int:
        return sum(t.rank for t in self.factors)


_TOKEN = re.compile(
    r"""
    (?P<dihedral>I2\((?P<m>\d+)\))
    | (?P<fam>[ABCDEFG])(?P<rank>\d+)
    """,
    re.VERBOSE,
)


def parse_type_spec(text: str) -> WeylSpec:
    """Parse a type string such as ``"A4xB3"`` or ``"I2(5) x G2"``."""
    if not isinstance(text, str):
        raise TypeError("type spec must be a string")
    # keep original offsets so syntax errors point into the caller's text
    chars, offsets = [], []
    for i, ch in enumerate(text):
        if not ch.isspace():
            chars.append(ch.upper())
            offsets.append(i)
    s = "".join(chars)
    if not s:
        raise SpecSyntaxError("empty type spec", text, 0)
    if s == "1":
        return WeylSpec(())

    def where(k):
        return offsets[k] if k < len(offsets) else len(text)

    factors = []
    pos = 0
    while True:
        m = _TOKEN.match(s, pos)
        if m is None:
            raise SpecSyntaxError("expected a factor like A3, E6, F4, G2 or I2(m)", text, where(pos))
        try:
            if m.group("dihedral"):
                factors.append(IrreducibleType("I2", 2, int(m.group("m"))))
            else:
                factors.append(IrreducibleType(m.group("fam"), int(m.group("rank"))))
        except SpecError as exc:
            raise SpecError(f"{exc} (factor at position {where(pos)} in {text!r})") from None
        pos = m.end()
        if pos == len(s):
            break
        if s[pos] != "X":
            raise SpecSyntaxError("expected 'x' between factors", text, where(pos))
        pos += 1
    return WeylSpec(tuple(factors))


def degrees(t: IrreducibleType) -> tuple[int, ...]:
    """Fundamental degrees of ``t``, sorted ascending."""
    fam, n = t.family, t.rank
    if fam == "A":
        ds = range(2, n + 2)
    elif fam == "B":
        ds = range(2, 2 * n + 1, 2)
    elif fam == "D":
        ds = [*range(2, 2 * n - 1, 2), n]
    elif fam == "E":
        ds = {
            6: (2, 5, 6, 8, 9, 12),
            7: (2, 6, 8, 10, 12, 14, 18),
            8: (2, 8, 12, 14, 18, 20, 24, 30),
        }[n]
    elif fam == "F":
        ds = (2, 6, 8, 12)
    elif fam == "G":
        ds = (2, 6)
    else:
        ds = (2, t.m)
    return tuple(sorted(ds))


def _as_factors(spec) -> Iterable[IrreducibleType]:
    if isinstance(spec, IrreducibleType):
        return (spec,)
    return spec.factors


def group_order(spec: WeylSpec | IrreducibleType) -> int:
    return reduce(lambda acc, t: acc * math.prod(degrees(t)), _as_factors(spec), 1)


def poincare_polynomial(spec: WeylSpec | IrreducibleType) -> IntPolynomial:
    """Length generating function, as the product of ``[d]_x`` over all degrees."""
    p = IntPolynomial([1])
    for t in _as_factors(spec):
        for d in degrees(t):
            p = poly_mul(p, q_integer(d))
    return p


def is_weyl(t: IrreducibleType) -> bool:
    """Crystallographic test; I2(m) is Weyl only as A2, B2 or G2."""
    return t.family != "I2" or t.m in (3, 4, 6)

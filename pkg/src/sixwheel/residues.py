"""Dual residue classification of integers.

Every integer gets a *type letter* a..i (its residue mod 9, with 0 written
as i) and a *six-class* alpha..zeta (its residue mod 6, with 0 written as
zeta).  For positive integers the type letter coincides with the decimal
digital root.  Each classified value also carries the index n solving
``value = offset + 6*n`` for its class offset.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

I64_MIN = -(2**63)
I64_MAX = 2**63 - 1


class TypeLetter(enum.IntEnum):
    """Digit-root type a..i; the numeric value is the residue mod 9 (0 -> 9)."""

    A = 1
    B = 2
    C = 3
    D = 4
    E = 5
    F = 6
    G = 7
    H = 8
    I = 9

    @property
    def letter(self) -> str:
        return self.name.lower()

    @property
    def numeric_index(self) -> int:
        return int(self)

    @classmethod
    def from_residue(cls, r: int) -> "TypeLetter":
        """Letter for an arbitrary integer residue, reducing mod 9 (0 -> i)."""
        return cls(r % 9 or 9)

    def __str__(self) -> str:
        return self.letter


class SixClass(enum.IntEnum):
    """Mod-6 class; the numeric value is the canonical offset (0 -> 6)."""

    ALPHA = 1
    BETA = 5
    GAMMA = 3
    DELTA = 4
    EPSILON = 2
    ZETA = 6

    @property
    def offset(self) -> int:
        return int(self)

    @property
    def label(self) -> str:
        return self.name.lower()

    @property
    def greek(self) -> str:
        return _GREEK[self]

    @classmethod
    def from_residue(cls, r: int) -> "SixClass":
        """Class for an arbitrary integer residue, reducing mod 6 (0 -> zeta)."""
        return cls(r % 6 or 6)

    def __str__(self) -> str:
        return self.label


_GREEK = {
    SixClass.ALPHA: "α",
    SixClass.BETA: "β",
    SixClass.GAMMA: "γ",
    SixClass.DELTA: "δ",
    SixClass.EPSILON: "ε",
    SixClass.ZETA: "ζ",
}

# Class offset -> admissible type letters.  Classes with odd offsets coprime
# to 6 (alpha, delta share residues 1 mod 3) pair with {a,d,g}, and so on;
# checked exhaustively in the tests.
CLASS_TYPE_SETS: dict[SixClass, frozenset[TypeLetter]] = {
    SixClass.ALPHA: frozenset({TypeLetter.A, TypeLetter.D, TypeLetter.G}),
    SixClass.DELTA: frozenset({TypeLetter.A, TypeLetter.D, TypeLetter.G}),
    SixClass.BETA: frozenset({TypeLetter.B, TypeLetter.E, TypeLetter.H}),
    SixClass.EPSILON: frozenset({TypeLetter.B, TypeLetter.E, TypeLetter.H}),
    SixClass.GAMMA: frozenset({TypeLetter.C, TypeLetter.F, TypeLetter.I}),
    SixClass.ZETA: frozenset({TypeLetter.C, TypeLetter.F, TypeLetter.I}),
}


@dataclass(frozen=True, slots=True)
class ClassifiedInteger:
    """An integer together with its type letter, six-class and class index."""

    value: int
    type_letter: TypeLetter
    six_class: SixClass
    index_n: int


def digital_root(n: int) -> int:
    """Repeated decimal digit sum of a positive integer (1..9).

    Equals ``1 + (n - 1) % 9``; only defined for n >= 1.
    """
    if n < 1:
        raise ValueError(f"digital root is defined for n >= 1, got {n}")
    return 1 + (n - 1) % 9


def type_of(n: int) -> TypeLetter:
    """Type letter of any integer: residue mod 9 with 0 mapped to i."""
    return TypeLetter.from_residue(n)


def class_of(n: int) -> SixClass:
    """Six-class of any integer: residue mod 6 with 0 mapped to zeta."""
    return SixClass.from_residue(n)


def decompose(n: int) -> ClassifiedInteger:
    """Full classification of n, including the index solving n = offset + 6k."""
    six = SixClass.from_residue(n)
    return ClassifiedInteger(n, TypeLetter.from_residue(n), six, (n - six.offset) // 6)


def compose(c: SixClass, n: int) -> int:
    """Value offset + 6*n of the class member with index n.

    Raises OverflowError if the result leaves the signed 64-bit range; the
    library's documented domain is 64-bit integers and a composed value must
    not wrap silently.
    """
    value = c.offset + 6 * n
    if not I64_MIN <= value <= I64_MAX:
        raise OverflowError(f"compose({c.label}, {n}) = {value} exceeds the signed 64-bit range")
    return value

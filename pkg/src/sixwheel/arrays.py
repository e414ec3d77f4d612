"""Text and CSV views of the classification arrays.

Four layouts, all built from the same (type letter, value) cells:

* ``A1``: positive integers 1, 2, 3, ... in 9-wide rows, columns a-i.
* ``A2_TRANSITION``: the same 9-wide layout extended over signed integers,
  showing the rows around the 0 crossing.
* ``A3``: all integers in 3-wide rows, so the type columns cycle
  (a b c / d e f / g h i).
* ``OA_EA``: paired odd/even rows; per base value b (b = 1 mod 6) the odd
  row holds b, b+4, b+2 (classes alpha, beta, gamma) and the even row
  b+3, b+1, b+5 (classes delta, epsilon, zeta), each annotated with its
  type letter.  Successive pairs step by 6, so every column advances in
  steps of exactly 6.
"""

from __future__ import annotations

import enum
import io
from dataclasses import dataclass

from .residues import TypeLetter, type_of

Cell = tuple[TypeLetter, int]


class ArrayKind(enum.Enum):
    A1 = "a1"
    A2_TRANSITION = "a2"
    A3 = "a3"
    OA_EA = "oa-ea"


# Required residue of first_value, and the modulus it is taken to.
_ALIGNMENT = {
    ArrayKind.A1: 9,
    ArrayKind.A2_TRANSITION: 9,
    ArrayKind.A3: 3,
    ArrayKind.OA_EA: 6,
}


@dataclass(frozen=True)
class ArrayView:
    kind: ArrayKind
    rows: tuple[tuple[Cell, ...], ...]

    @property
    def width(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def to_text(self) -> str:
        """Fixed-width rows of "letter value" cells, values right-aligned
        per column, cells separated by two spaces."""
        widths = [
            max(len(str(row[c][1])) for row in self.rows) for c in range(self.width)
        ]
        lines = []
        for row in self.rows:
            cells = [f"{letter} {value:>{widths[c]}}" for c, (letter, value) in enumerate(row)]
            lines.append("  ".join(cells))
        return "\n".join(lines) + "\n"

    def to_csv(self) -> str:
        """Header c1..cN, then one "letter:value" cell per column per row."""
        buf = io.StringIO()
        buf.write(",".join(f"c{i + 1}" for i in range(self.width)) + "\n")
        for row in self.rows:
            buf.write(",".join(f"{letter}:{value}" for letter, value in row) + "\n")
        return buf.getvalue()


def _cell(value: int) -> Cell:
    return (type_of(value), value)


def render(kind: ArrayKind, first_value: int, row_count: int) -> ArrayView:
    """Build a view of ``row_count`` rows starting at ``first_value``.

    ``first_value`` must be row-aligned for the kind: = 1 mod 9 for A1 and
    the A2 transition (A1 additionally requires it positive), = 1 mod 3
    for A3, = 1 mod 6 for OA/EA.  For OA/EA, ``row_count`` counts row
    pairs, so the view carries 2 * row_count rows.
    """
    if row_count < 1:
        raise ValueError(f"row_count must be >= 1, got {row_count}")
    modulus = _ALIGNMENT[kind]
    if first_value % modulus != 1:
        raise ValueError(
            f"first_value for {kind.value} must be congruent to 1 mod {modulus}, got {first_value}"
        )
    if kind is ArrayKind.A1 and first_value < 1:
        raise ValueError(f"a1 holds positive integers only, got first_value {first_value}")

    rows = []
    if kind is ArrayKind.OA_EA:
        for r in range(row_count):
            b = first_value + 6 * r
            rows.append(tuple(_cell(v) for v in (b, b + 4, b + 2)))
            rows.append(tuple(_cell(v) for v in (b + 3, b + 1, b + 5)))
    else:
        width = 9 if modulus == 9 else 3
        for r in range(row_count):
            start = first_value + width * r
            rows.append(tuple(_cell(start + c) for c in range(width)))
    return ArrayView(kind, tuple(rows))

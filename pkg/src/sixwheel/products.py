"""Product algebra of the two classifications.

The type of a product depends only on the types of its operands; the same
holds for six-classes.  The 9x9 type table is stored as literal data *and*
must agree with the mod-9 rule ``index(x*y) = index(x)*index(y) mod 9``
(0 written as 9) -- the test suite pins both so a data-entry typo cannot
hide.  At the class level the result class follows the offsets mod 6, and
the index of the product is an affine-bilinear function of the operand
indices, exposed here as :class:`ProductRule`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .residues import SixClass, TypeLetter, class_of, type_of
from .verification import Counterexample, VerificationReport

# Stored 9x9 table: row letter -> result letters for columns a..i.
_TABLE_ROWS = {
    "a": "abcdefghi",
    "b": "bdfhacegi",
    "c": "cficficfi",
    "d": "dhcgbfaei",
    "e": "eafbgchdi",
    "f": "fcifcifci",
    "g": "gecahfdbi",
    "h": "hgfedcbai",
    "i": "iiiiiiiii",
}


def _letter(ch: str) -> TypeLetter:
    return TypeLetter(ord(ch) - ord("a") + 1)


TYPE_PRODUCT_TABLE: dict[TypeLetter, dict[TypeLetter, TypeLetter]] = {
    _letter(row_ch): {TypeLetter(j + 1): _letter(ch) for j, ch in enumerate(row)}
    for row_ch, row in _TABLE_ROWS.items()
}

_SUBMATRIX_AXES: dict[str, tuple[tuple[TypeLetter, ...], tuple[TypeLetter, ...]]] = {
    "M1": (
        (TypeLetter.A, TypeLetter.D, TypeLetter.G),
        (TypeLetter.A, TypeLetter.D, TypeLetter.G),
    ),
    "M2": (
        (TypeLetter.B, TypeLetter.E, TypeLetter.H),
        (TypeLetter.B, TypeLetter.E, TypeLetter.H),
    ),
    "M3": (
        (TypeLetter.B, TypeLetter.E, TypeLetter.H),
        (TypeLetter.A, TypeLetter.D, TypeLetter.G),
    ),
}


def type_product(x: TypeLetter, y: TypeLetter) -> TypeLetter:
    """Type of any product of a type-x integer with a type-y integer."""
    return TYPE_PRODUCT_TABLE[x][y]


def submatrix(which: str) -> dict[tuple[TypeLetter, TypeLetter], TypeLetter]:
    """One of the 3x3 restrictions M1 ({a,d,g} x {a,d,g}), M2 ({b,e,h} x
    {b,e,h}) or M3 ({b,e,h} rows x {a,d,g} columns) of the full table."""
    try:
        rows, cols = _SUBMATRIX_AXES[which.upper()]
    except KeyError:
        raise ValueError(f"unknown submatrix {which!r}, expected M1, M2 or M3") from None
    return {(r, c): type_product(r, c) for r in rows for c in cols}


def class_product(x: SixClass, y: SixClass) -> SixClass:
    """Six-class of any product of class-x and class-y integers."""
    return SixClass.from_residue(x.offset * y.offset)


@dataclass(frozen=True)
class ProductRule:
    """Index arithmetic for the product of two classified integers.

    If v = x.offset + 6*n_x and w = y.offset + 6*n_y, then v*w belongs to
    ``result`` with index ``c0 + c_left*n_x + c_right*n_y + 6*n_x*n_y``.
    The coefficients fall out of expanding the product: c0 is the carry
    (x.offset*y.offset - result.offset)/6, c_left = y.offset and
    c_right = x.offset.
    """

    left: SixClass
    right: SixClass
    result: SixClass
    c0: int
    c_left: int
    c_right: int

    def index(self, n_left: int, n_right: int) -> int:
        return self.c0 + self.c_left * n_left + self.c_right * n_right + 6 * n_left * n_right


def product_rule(x: SixClass, y: SixClass) -> ProductRule:
    """The exact index rule for products of class-x with class-y members."""
    result = class_product(x, y)
    c0 = (x.offset * y.offset - result.offset) // 6
    return ProductRule(x, y, result, c0, y.offset, x.offset)


def _signed_values(limit: int) -> np.ndarray:
    """All integers with |v| <= limit, sorted by (|v|, v): 0, -1, 1, -2, 2, ..."""
    values = np.empty(2 * limit + 1, dtype=np.int64)
    values[0] = 0
    values[1::2] = -np.arange(1, limit + 1)
    values[2::2] = np.arange(1, limit + 1)
    return values


def _scan_pairs(
    limit: int,
    bad_block: Callable[[np.ndarray, np.ndarray], np.ndarray],
    block: int = 256,
) -> tuple[int, list[tuple[int, int]]]:
    """Scan all ordered pairs (x, y) with |x|,|y| <= limit for failures.

    ``bad_block`` maps (x-block, y-vector) to a boolean failure matrix.
    Returns the number of pairs checked and any failing pairs; the scan only
    stops early once no later pair could beat the lexicographically smallest
    (|x|, |y|, x, y) failure already in hand.
    """
    values = _signed_values(limit)
    checked = 0
    failures: list[tuple[int, int]] = []
    best_absx: int | None = None
    for start in range(0, len(values), block):
        xs = values[start : start + block]
        # Blocks arrive in ascending |x|; past the first failing |x| no later
        # pair can win the (|x|, |y|, ...) ordering.
        if best_absx is not None and abs(int(xs[0])) > best_absx:
            break
        bad = bad_block(xs, values)
        checked += xs.size * values.size
        if bad.any():
            ii, jj = np.nonzero(bad)
            for i, j in zip(ii.tolist(), jj.tolist()):
                failures.append((int(xs[i]), int(values[j])))
            block_best = min(abs(x) for x, _ in failures)
            best_absx = block_best if best_absx is None else min(best_absx, block_best)
    return checked, failures


def _first_failure(failures: list[tuple[int, int]]) -> tuple[int, int]:
    return min(failures, key=lambda p: (abs(p[0]), abs(p[1]), p[0], p[1]))


# Residues mod 9 of the absorbing types c, f, i.
_ABSORBING9 = np.zeros(9, dtype=bool)
_ABSORBING9[[0, 3, 6]] = True


def _stored_residue_table() -> np.ndarray:
    """9x9 residue-indexed view of the stored table (entries as residues 0..8)."""
    table = np.empty((9, 9), dtype=np.int64)
    for rx in range(9):
        for ry in range(9):
            entry = type_product(TypeLetter.from_residue(rx), TypeLetter.from_residue(ry))
            table[rx, ry] = entry.numeric_index % 9
    return table


def verify_type_closure(limit: int) -> VerificationReport:
    """Exhaustively check type_of(x*y) == type_product over |x|,|y| <= limit.

    Also checks, over the same pairs, that any product touching an
    absorbing-type operand (c, f or i) lands back in {c, f, i}, and that the
    three submatrices have the ranges their entries imply.
    """
    if limit < 1:
        raise ValueError(f"verification limit must be >= 1, got {limit}")
    stored = _stored_residue_table()

    def bad_block(xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
        rx = xs % 9
        ry = ys % 9
        prod_res = (xs[:, None] * ys[None, :]) % 9
        mismatch = prod_res != stored[rx[:, None], ry[None, :]]
        touches_absorbing = _ABSORBING9[rx][:, None] | _ABSORBING9[ry][None, :]
        escaped = touches_absorbing & ~_ABSORBING9[prod_res]
        return mismatch | escaped

    checked, failures = _scan_pairs(limit, bad_block)

    notes = [
        "absorbing law: every product with an operand of type c, f or i lands in {c,f,i}",
        _submatrix_range_note("M1"),
        _submatrix_range_note("M3"),
        "M2 range is {a,d,g}: the product of two type-{b,e,h} numbers always lands in "
        "{a,d,g}, never back in {b,e,h}; prose describing such products as staying of "
        "the same types b, e, h conflicts with the table's own entries, which follow "
        "the mod-9 rule",
    ]
    passed = not failures
    expected_ranges = {
        "M1": {TypeLetter.A, TypeLetter.D, TypeLetter.G},
        "M2": {TypeLetter.A, TypeLetter.D, TypeLetter.G},
        "M3": {TypeLetter.B, TypeLetter.E, TypeLetter.H},
    }
    for name, expected in expected_ranges.items():
        if set(submatrix(name).values()) != expected:
            passed = False
            notes.append(f"UNEXPECTED: range({name}) deviates from its pinned letter set")

    counterexample = None
    if failures:
        x, y = _first_failure(failures)
        expected_letter = type_product(type_of(x), type_of(y))
        got = type_of(x * y)
        if expected_letter != got:
            counterexample = Counterexample(x, y, expected_letter.letter, got.letter)
        else:
            counterexample = Counterexample(x, y, "a type in {c,f,i}", got.letter)
    return VerificationReport(
        check="type-closure",
        limit=limit,
        checked=checked,
        passed=passed,
        counterexample=counterexample,
        notes=tuple(notes),
    )


def _submatrix_range_note(which: str) -> str:
    letters = sorted(entry.letter for entry in set(submatrix(which).values()))
    return f"{which} range is {{{','.join(letters)}}}"


def verify_class_closure(limit: int) -> VerificationReport:
    """Exhaustively check class_of(x*y) and the full ProductRule index formula
    over all ordered pairs with |x|,|y| <= limit."""
    if limit < 1:
        raise ValueError(f"verification limit must be >= 1, got {limit}")

    # Residue-indexed (0..5) coefficient tables covering the 36 ordered rules.
    offsets = np.array([r or 6 for r in range(6)], dtype=np.int64)
    result_res = np.empty((6, 6), dtype=np.int64)
    result_off = np.empty((6, 6), dtype=np.int64)
    c0 = np.empty((6, 6), dtype=np.int64)
    c_left = np.empty((6, 6), dtype=np.int64)
    c_right = np.empty((6, 6), dtype=np.int64)
    for rx in range(6):
        for ry in range(6):
            rule = product_rule(SixClass.from_residue(rx), SixClass.from_residue(ry))
            result_res[rx, ry] = rule.result.offset % 6
            result_off[rx, ry] = rule.result.offset
            c0[rx, ry] = rule.c0
            c_left[rx, ry] = rule.c_left
            c_right[rx, ry] = rule.c_right

    def bad_block(xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
        rx = xs % 6
        ry = ys % 6
        prod = xs[:, None] * ys[None, :]
        class_mismatch = prod % 6 != result_res[rx[:, None], ry[None, :]]
        n_x = (xs - offsets[rx]) // 6
        n_y = (ys - offsets[ry]) // 6
        index = (
            c0[rx[:, None], ry[None, :]]
            + c_left[rx[:, None], ry[None, :]] * n_x[:, None]
            + c_right[rx[:, None], ry[None, :]] * n_y[None, :]
            + 6 * n_x[:, None] * n_y[None, :]
        )
        rule_mismatch = result_off[rx[:, None], ry[None, :]] + 6 * index != prod
        return class_mismatch | rule_mismatch

    checked, failures = _scan_pairs(limit, bad_block)

    counterexample = None
    if failures:
        x, y = _first_failure(failures)
        expected_class = class_product(class_of(x), class_of(y))
        got_class = class_of(x * y)
        if expected_class != got_class:
            counterexample = Counterexample(x, y, expected_class.label, got_class.label)
        else:
            rule = product_rule(class_of(x), class_of(y))
            n_x = (x - class_of(x).offset) // 6
            n_y = (y - class_of(y).offset) // 6
            predicted = rule.result.offset + 6 * rule.index(n_x, n_y)
            counterexample = Counterexample(x, y, str(x * y), f"rule predicts {predicted}")
    return VerificationReport(
        check="class-closure",
        limit=limit,
        checked=checked,
        passed=not failures,
        counterexample=counterexample,
        notes=("index rule checked in full: offset + 6*(c0 + c_l*n_x + c_r*n_y + 6*n_x*n_y) == x*y",),
    )

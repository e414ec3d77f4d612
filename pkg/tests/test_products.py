"""Product algebra: the 9x9 type table, submatrices, class product rules."""

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

import sixwheel.products as products
from sixwheel import (
    SixClass,
    TypeLetter,
    class_of,
    class_product,
    compose,
    product_rule,
    submatrix,
    type_of,
    type_product,
    verify_class_closure,
    verify_type_closure,
)

# Second, independently entered copy of the 9x9 table, kept separate from
# the production copy so a typo in either shows up as a disagreement.
TABLE_ROWS = {
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

LETTERS = [TypeLetter(k) for k in range(1, 10)]


class TestTypeTable:
    def test_stored_table_matches_second_copy(self):
        for x in LETTERS:
            for y in LETTERS:
                expected = TABLE_ROWS[x.letter][y.numeric_index - 1]
                assert type_product(x, y).letter == expected

    def test_stored_table_matches_mod9_derivation(self):
        count = 0
        for x in LETTERS:
            for y in LETTERS:
                derived = TypeLetter.from_residue(x.numeric_index * y.numeric_index)
                assert type_product(x, y) is derived
                count += 1
        assert count == 81

    def test_commutative(self):
        for x in LETTERS:
            for y in LETTERS:
                assert type_product(x, y) is type_product(y, x)

    def test_identity_and_absorber(self):
        for x in LETTERS:
            assert type_product(TypeLetter.A, x) is x
            assert type_product(TypeLetter.I, x) is TypeLetter.I

    def test_example_products(self):
        # 8 * 8 = 64 and 8 * (-1) = -8 are both h*h -> a
        assert type_product(TypeLetter.H, TypeLetter.H) is TypeLetter.A
        assert type_of(8 * 8) is TypeLetter.A
        assert type_of(8 * -1) is TypeLetter.A


class TestSubmatrices:
    def test_m1(self):
        m1 = submatrix("M1")
        adg = (TypeLetter.A, TypeLetter.D, TypeLetter.G)
        assert set(m1) == {(r, c) for r in adg for c in adg}
        assert m1[(TypeLetter.D, TypeLetter.D)] is TypeLetter.G
        assert m1[(TypeLetter.G, TypeLetter.D)] is TypeLetter.A
        assert set(m1.values()) == set(adg)

    def test_m2_range_is_adg(self):
        # the 3x3 block over rows/cols b,e,h lands entirely in a,d,g
        m2 = submatrix("M2")
        assert m2[(TypeLetter.B, TypeLetter.B)] is TypeLetter.D
        assert m2[(TypeLetter.E, TypeLetter.E)] is TypeLetter.G
        assert m2[(TypeLetter.H, TypeLetter.B)] is TypeLetter.G
        assert set(m2.values()) == {TypeLetter.A, TypeLetter.D, TypeLetter.G}

    def test_m3(self):
        m3 = submatrix("M3")
        assert m3[(TypeLetter.B, TypeLetter.A)] is TypeLetter.B
        assert m3[(TypeLetter.E, TypeLetter.D)] is TypeLetter.B
        assert m3[(TypeLetter.H, TypeLetter.G)] is TypeLetter.B
        assert set(m3.values()) == {TypeLetter.B, TypeLetter.E, TypeLetter.H}

    def test_unknown_name_rejected(self):
        with pytest.raises(ValueError):
            submatrix("M4")


# Expected rule for every ordered class pair, worked out by expanding
# (p + 6*nl)(q + 6*nr) by hand: entries are (left, right, result, c0,
# coeff on n_left, coeff on n_right), product index = c0 + cl*nl + cr*nr
# + 6*nl*nr.
EXPANDED_RULES = [
    (SixClass.ALPHA, SixClass.ALPHA, SixClass.ALPHA, 0, 1, 1),
    (SixClass.ALPHA, SixClass.BETA, SixClass.BETA, 0, 5, 1),
    (SixClass.ALPHA, SixClass.GAMMA, SixClass.GAMMA, 0, 3, 1),
    (SixClass.ALPHA, SixClass.DELTA, SixClass.DELTA, 0, 4, 1),
    (SixClass.ALPHA, SixClass.EPSILON, SixClass.EPSILON, 0, 2, 1),
    (SixClass.ALPHA, SixClass.ZETA, SixClass.ZETA, 0, 6, 1),
    (SixClass.BETA, SixClass.ALPHA, SixClass.BETA, 0, 1, 5),
    (SixClass.BETA, SixClass.BETA, SixClass.ALPHA, 4, 5, 5),
    (SixClass.BETA, SixClass.GAMMA, SixClass.GAMMA, 2, 3, 5),
    (SixClass.BETA, SixClass.DELTA, SixClass.EPSILON, 3, 4, 5),
    (SixClass.BETA, SixClass.EPSILON, SixClass.DELTA, 1, 2, 5),
    (SixClass.BETA, SixClass.ZETA, SixClass.ZETA, 4, 6, 5),
    (SixClass.GAMMA, SixClass.ALPHA, SixClass.GAMMA, 0, 1, 3),
    (SixClass.GAMMA, SixClass.BETA, SixClass.GAMMA, 2, 5, 3),
    (SixClass.GAMMA, SixClass.GAMMA, SixClass.GAMMA, 1, 3, 3),
    (SixClass.GAMMA, SixClass.DELTA, SixClass.ZETA, 1, 4, 3),
    (SixClass.GAMMA, SixClass.EPSILON, SixClass.ZETA, 0, 2, 3),
    (SixClass.GAMMA, SixClass.ZETA, SixClass.ZETA, 2, 6, 3),
    (SixClass.DELTA, SixClass.ALPHA, SixClass.DELTA, 0, 1, 4),
    (SixClass.DELTA, SixClass.BETA, SixClass.EPSILON, 3, 5, 4),
    (SixClass.DELTA, SixClass.GAMMA, SixClass.ZETA, 1, 3, 4),
    (SixClass.DELTA, SixClass.DELTA, SixClass.DELTA, 2, 4, 4),
    (SixClass.DELTA, SixClass.EPSILON, SixClass.EPSILON, 1, 2, 4),
    (SixClass.DELTA, SixClass.ZETA, SixClass.ZETA, 3, 6, 4),
    (SixClass.EPSILON, SixClass.ALPHA, SixClass.EPSILON, 0, 1, 2),
    (SixClass.EPSILON, SixClass.BETA, SixClass.DELTA, 1, 5, 2),
    (SixClass.EPSILON, SixClass.GAMMA, SixClass.ZETA, 0, 3, 2),
    (SixClass.EPSILON, SixClass.DELTA, SixClass.EPSILON, 1, 4, 2),
    (SixClass.EPSILON, SixClass.EPSILON, SixClass.DELTA, 0, 2, 2),
    (SixClass.EPSILON, SixClass.ZETA, SixClass.ZETA, 1, 6, 2),
    (SixClass.ZETA, SixClass.ALPHA, SixClass.ZETA, 0, 1, 6),
    (SixClass.ZETA, SixClass.BETA, SixClass.ZETA, 4, 5, 6),
    (SixClass.ZETA, SixClass.GAMMA, SixClass.ZETA, 2, 3, 6),
    (SixClass.ZETA, SixClass.DELTA, SixClass.ZETA, 3, 4, 6),
    (SixClass.ZETA, SixClass.EPSILON, SixClass.ZETA, 1, 2, 6),
    (SixClass.ZETA, SixClass.ZETA, SixClass.ZETA, 5, 6, 6),
]

ALL_CLASSES = list(SixClass)


class TestProductRule:
    def test_expanded_table_covers_every_ordered_pair(self):
        assert len(EXPANDED_RULES) == 36
        assert {(l, r) for l, r, *_ in EXPANDED_RULES} == {
            (x, y) for x in ALL_CLASSES for y in ALL_CLASSES
        }

    @pytest.mark.parametrize("left,right,result,c0,cl,cr", EXPANDED_RULES)
    def test_coefficients(self, left, right, result, c0, cl, cr):
        rule = product_rule(left, right)
        assert rule.result is result
        assert (rule.c0, rule.c_left, rule.c_right) == (c0, cl, cr)

    def test_class_product_matches_rule_result(self):
        for x in ALL_CLASSES:
            for y in ALL_CLASSES:
                assert product_rule(x, y).result is class_product(x, y)

    def test_rule_reproduces_actual_products(self):
        ns = range(-40, 41)
        for x in ALL_CLASSES:
            for y in ALL_CLASSES:
                rule = product_rule(x, y)
                for nx in ns:
                    prod = compose(x, nx)
                    for ny in ns:
                        expected = prod * compose(y, ny)
                        got = rule.result.offset + 6 * rule.index(nx, ny)
                        assert got == expected

    def test_class_product_commutative_and_alpha_identity(self):
        for x in ALL_CLASSES:
            assert class_product(SixClass.ALPHA, x) is x
            for y in ALL_CLASSES:
                assert class_product(x, y) is class_product(y, x)

    @given(
        st.sampled_from(ALL_CLASSES),
        st.sampled_from(ALL_CLASSES),
        st.integers(min_value=-10**8, max_value=10**8),
        st.integers(min_value=-10**8, max_value=10**8),
    )
    def test_rule_property(self, x, y, nx, ny):
        rule = product_rule(x, y)
        assert rule.result.offset + 6 * rule.index(nx, ny) == compose(x, nx) * compose(y, ny)


class TestVerifiers:
    def test_type_closure_passes(self):
        report = verify_type_closure(400)
        assert report.passed
        assert report.checked == 801 * 801
        assert report.counterexample is None

    def test_type_closure_notes_pin_m2_range(self):
        report = verify_type_closure(5)
        joined = "\n".join(report.notes)
        assert "M2 range is {a,d,g}" in joined
        assert "M1 range is {a,d,g}" in joined
        assert "M3 range is {b,e,h}" in joined

    def test_class_closure_passes(self):
        report = verify_class_closure(400)
        assert report.passed
        assert report.checked == 801 * 801
        assert report.counterexample is None

    def test_rejects_nonpositive_limit(self):
        with pytest.raises(ValueError):
            verify_type_closure(0)
        with pytest.raises(ValueError):
            verify_class_closure(-3)

    def test_corrupted_table_is_caught_with_smallest_counterexample(self, monkeypatch):
        # poison one cell of the residue table the verifier scans against:
        # entry for (2 mod 9, 2 mod 9) i.e. b*b, first hit at x=y=2
        broken = products._stored_residue_table()
        broken[2 % 9, 2 % 9] = 5
        monkeypatch.setattr(products, "_stored_residue_table", lambda: broken)
        report = verify_type_closure(50)
        assert not report.passed
        ce = report.counterexample
        assert ce is not None
        assert (ce.x, ce.y) == (2, 2)

    def test_scan_order_prefers_smallest_absolute_pair(self):
        values = products._signed_values(3)
        assert values.tolist() == [0, -1, 1, -2, 2, -3, 3]
        assert products._first_failure([(3, 1), (-2, 5), (2, 0)]) == (2, 0)
        assert products._first_failure([(-2, 5), (2, 5)]) == (-2, 5)


class TestNumpyAgreement:
    def test_vectorized_residues_match_scalar_path(self):
        xs = np.arange(-500, 501)
        for x in (-7, 0, 13):
            for y in xs[:50].tolist():
                assert type_of(x * y) is type_product(type_of(x), type_of(y))
                assert class_of(x * y) is class_product(class_of(x), class_of(y))

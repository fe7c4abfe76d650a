"""Weight parsing, shift equivalence and the dominance predicates."""

from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gkdim import (
    LengthMismatchError,
    ParseError,
    PQContext,
    Weight,
    add_z_zeta,
    is_pq_dominant,
    parse_rational,
    parse_weight,
)

rationals = st.fractions(
    min_value=-20, max_value=20, max_denominator=12
)
weights = st.lists(rationals, min_size=1, max_size=9).map(Weight)


class TestParsing:
    def test_exact_decimals(self):
        assert parse_rational("3.5") == F(7, 2)
        assert parse_rational("1.1") == F(11, 10)
        assert parse_rational("-0.25") == F(-1, 4)

    def test_fractions_and_integers(self):
        assert parse_rational("19/10") == F(19, 10)
        assert parse_rational("-7") == F(-7)

    @pytest.mark.parametrize("bad", ["", "x", "1.1.1", "3/0", "1e3", "1/2/3"])
    def test_rejects(self, bad):
        with pytest.raises(ParseError):
            parse_rational(bad)

    def test_weight_round_trip(self):
        w = parse_weight(" 3, 3.5 ,2,1.5,-1,5.5,-1,0,1.1")
        assert w.entries[1] == F(7, 2)
        assert w.entries[-1] == F(11, 10)
        again = parse_weight(",".join(w.to_strings()))
        assert again.entries == w.entries

    def test_empty_weight(self):
        with pytest.raises(ParseError):
            parse_weight("")


class TestCanonicalize:
    def test_already_canonical(self):
        assert Weight([2, 1, 0]).canonicalize().entries == (2, 1, 0)

    def test_constant_shift(self):
        assert Weight([3, 2, 1]).canonicalize().entries == (2, 1, 0)

    def test_rational_shift(self):
        w = parse_weight("3,7/2,2,3/2,-1,11/2,-1,0,11/10")
        expected = tuple(e - F(11, 10) for e in w.entries)
        assert w.canonicalize().entries == expected
        assert w.canonicalize().entries == (
            F(19, 10), F(12, 5), F(9, 10), F(2, 5), F(-21, 10),
            F(22, 5), F(-21, 10), F(-11, 10), F(0),
        )

    @given(weights)
    def test_idempotent_and_equal(self, w):
        c = w.canonicalize()
        assert c.canonicalize() == c
        assert c.canonicalize().entries == c.entries
        assert c == w

    @given(weights, rationals)
    def test_equality_is_shift_equivalence(self, w, c):
        assert w.shift(c) == w
        assert hash(w.shift(c)) == hash(w)

    def test_different_lengths_unequal(self):
        assert Weight([1, 0]) != Weight([1, 0, 0])


class TestIntegral:
    def test_paper_integral_example(self):
        assert parse_weight("5,4,3,2,1,9,8,7,6,2").is_integral()

    def test_paper_non_integral_example(self):
        assert not parse_weight("3,3.5,2,1.5,-1,5.5,-1,0,1.1").is_integral()

    @given(rationals)
    def test_constant_pair(self, c):
        assert Weight([c, c]).is_integral()

    @given(weights, rationals)
    def test_shift_invariant(self, w, c):
        assert w.is_integral() == w.shift(c).is_integral()


class TestAntidominant:
    def test_increasing_integral(self):
        assert Weight([1, 2, 3]).is_antidominant()

    def test_decreasing_integral(self):
        assert not Weight([2, 1]).is_antidominant()

    def test_only_integral_pairs_constrained(self):
        assert Weight([2, F(1, 2), 3]).is_antidominant()
        assert not Weight([3, F(1, 2), 2]).is_antidominant()

    @given(weights, rationals)
    def test_shift_invariant(self, w, c):
        assert w.is_antidominant() == w.shift(c).is_antidominant()


class TestPQDominance:
    def test_worked_example(self):
        w = parse_weight("6,5,3,2,9,8,7,4,2,1")
        assert is_pq_dominant(w, PQContext(4, 6))

    def test_small_true(self):
        assert is_pq_dominant(Weight([2, 1, 1, 0]), PQContext(2, 2))

    def test_first_half_violation(self):
        assert not is_pq_dominant(Weight([1, 1, 2, 1]), PQContext(2, 2))

    def test_non_integer_gap_violation(self):
        assert not is_pq_dominant(Weight([2, F(1, 2), 3, 1]), PQContext(2, 2))

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatchError):
            is_pq_dominant(Weight([1, 0]), PQContext(2, 2))

    @given(st.integers(-10, 10))
    def test_dominance_preserved_by_zeta_shift(self, z):
        w = Weight([6, 5, 3, 2, 9, 8, 7, 4, 2, 1])
        ctx = PQContext(4, 6)
        assert is_pq_dominant(add_z_zeta(w, ctx, z), ctx)


class TestAddZZeta:
    def test_integer_shift(self):
        w = add_z_zeta(Weight([2, 1, 4, 3, 2]), PQContext(2, 3), 3)
        assert w.entries == (5, 4, 4, 3, 2)

    def test_zero_is_identity(self):
        w = Weight([2, 1, 4, 3, 2])
        assert add_z_zeta(w, PQContext(2, 3), 0).entries == w.entries

    def test_rational_shift(self):
        w = add_z_zeta(Weight([2, 1, 4, 3, 2]), PQContext(2, 3), F(1, 2))
        assert w.entries == (F(5, 2), F(3, 2), 4, 3, 2)

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatchError):
            add_z_zeta(Weight([1, 0]), PQContext(2, 2), 1)

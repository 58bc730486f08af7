"""Tests for the periodic set algebra."""

from math import lcm

import pytest
from hypothesis import given

from jinf.core import setalg
from jinf.core.setalg import (
    EMPTY,
    EVENS,
    INFINITE,
    NATURALS,
    ODDS,
    Finite,
    OrbitKind,
    canonicalize,
    classify_orbit,
    finiteness,
    from_elements,
    from_raw,
    greater_than,
    member,
    residue_class,
    set_op,
    split_infinite,
)
from jinf.tests.strategies import periodic_sets
from jinf.utils.exceptions import (
    DomainError,
    MalformedRepresentation,
    NotInfinite,
    NotProperSubset,
    PeriodLimitExceeded,
)


def window(*sets):
    return max(s.prefix_len for s in sets) + 2 * lcm(*(s.period_len for s in sets))


class TestCanonicalForm:
    def test_trailing_prefix_is_absorbed(self):
        assert canonicalize((True, False), (True, False)) == ODDS
        assert canonicalize((True, False), (True, False)).prefix_len == 0

    def test_period_is_primitive(self):
        s = canonicalize((), (True, False, True, False))
        assert s.period == (True, False)
        assert s == ODDS

    def test_prefix_that_cannot_shrink(self):
        s = from_raw(1, "0", 2, "01")
        assert (s.prefix_len, s.period_len) == (1, 2)
        assert s == ODDS - from_elements([1])
        assert [n for n in range(1, 10) if n in s] == [3, 5, 7, 9]

    def test_direct_construction_is_canonicalized(self):
        raw = setalg.PeriodicSet((False, True, False, True), (False, True))
        assert raw == EVENS

    @pytest.mark.parametrize("args", [
        (0, "", 0, ""),
        (2, "1", 1, "0"),
        (1, "2", 1, "0"),
        (0, "", 2, "1"),
    ])
    def test_malformed_descriptions(self, args):
        with pytest.raises(MalformedRepresentation):
            from_raw(*args)

    @given(periodic_sets(), periodic_sets())
    def test_equality_is_extensional(self, a, b):
        same = all((n in a) == (n in b) for n in range(1, window(a, b) + 1))
        assert (a == b) == same


class TestMembership:
    def test_named_sets(self, evens, odds, mult3):
        assert [n for n in range(1, 8) if n in evens] == [2, 4, 6]
        assert [n for n in range(1, 8) if n in odds] == [1, 3, 5, 7]
        assert [n for n in range(1, 10) if n in mult3] == [3, 6, 9]

    def test_domain(self, evens):
        assert member(evens, 4)
        assert not member(evens, 5)
        with pytest.raises(DomainError):
            member(evens, 0)

    def test_greater_than(self):
        s = greater_than(3)
        assert s.first(3) == [4, 5, 6]
        assert s.is_cofinite()

    def test_elements_with_limit(self, mult3):
        assert list(mult3.elements(limit=12)) == [3, 6, 9, 12]
        assert list(from_elements([5, 2]).elements()) == [2, 5]

    def test_literal_rejects_zero(self):
        with pytest.raises(DomainError):
            from_elements([0, 1])

    def test_min_of_empty(self):
        with pytest.raises(NotProperSubset):
            EMPTY.min()


class TestBooleanOperations:
    def test_diff_of_evens(self, evens):
        s = evens - from_elements([2, 4])
        assert [n for n in range(1, 13) if n in s] == [6, 8, 10, 12]

    def test_inter_of_residue_classes(self, evens, mult3):
        assert evens & mult3 == residue_class(6, 0)

    def test_complement(self, evens, odds):
        assert ~evens == odds
        assert set_op("complement", NATURALS) == EMPTY

    def test_operand_count(self, evens):
        with pytest.raises(MalformedRepresentation):
            set_op("union", evens)
        with pytest.raises(MalformedRepresentation):
            set_op("complement", evens, evens)

    def test_period_limit(self):
        with pytest.raises(PeriodLimitExceeded):
            set_op("union", residue_class(3, 0), residue_class(4, 0), limit=10)

    def test_subset(self, evens):
        assert residue_class(4, 0) <= evens
        assert residue_class(4, 0) < evens
        assert not evens < evens

    @given(periodic_sets(), periodic_sets(), periodic_sets())
    def test_laws(self, a, b, c):
        assert ~(a | b) == ~a & ~b
        assert a & (b | c) == (a & b) | (a & c)
        assert a ^ b == (a - b) | (b - a)
        assert ~~a == a

    @given(periodic_sets(), periodic_sets())
    def test_membership_agrees_pointwise(self, a, b):
        union, inter, diff = a | b, a & b, a - b
        for n in range(1, window(a, b) + 1):
            assert (n in union) == (n in a or n in b)
            assert (n in inter) == (n in a and n in b)
            assert (n in diff) == (n in a and n not in b)


class TestOrbits:
    def test_finiteness(self, evens):
        assert finiteness(from_elements([3, 1])) == Finite((1, 3))
        assert finiteness(evens) is INFINITE
        assert setalg.cardinality(from_elements([1, 2, 9])) == 3
        assert setalg.cardinality(evens) is None

    def test_classify(self, evens):
        assert str(classify_orbit(from_elements([1, 2]))) == "FiniteOfSize(2)"
        assert str(classify_orbit(~from_elements([1]))) == "CofiniteOfCodim(1)"
        assert classify_orbit(evens).kind is OrbitKind.BALANCED

    @pytest.mark.parametrize("s", [EMPTY, NATURALS])
    def test_improper_subsets(self, s):
        with pytest.raises(NotProperSubset):
            classify_orbit(s)


class TestSplit:
    def test_split_evens(self, evens):
        first, second = split_infinite(evens)
        assert first == residue_class(4, 2)
        assert second == residue_class(4, 0)

    def test_split_finite(self):
        with pytest.raises(NotInfinite):
            split_infinite(from_elements([1]))

    @given(periodic_sets())
    def test_halves_partition(self, s):
        if s.is_finite():
            return
        first, second = split_infinite(s)
        assert (first & second).is_empty()
        assert first | second == s
        assert not first.is_finite() and not second.is_finite()

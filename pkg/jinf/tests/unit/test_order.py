"""Tests for order automorphisms and the preservation checkers."""

import pytest
from hypothesis import given

from jinf.auto.automorphisms import RegularAutomorphism, as_oracle, build_example_one
from jinf.auto.order import (
    check_covering_preservation,
    check_intersection_preservation,
    check_kneser_preservation,
    check_order_preserving_on_samples,
    order_sigma,
    probe_pair,
    reconstruct_order_automorphism,
    reconstruct_order_preserving,
)
from jinf.core.setalg import ODDS, from_elements, residue_class
from jinf.graph.johnson import Vertex
from jinf.tests.strategies import computable_permutations
from jinf.utils.exceptions import (
    DomainError,
    IntersectionNotVertex,
    NotSingletonIntersection,
    PreconditionViolated,
)


def test_separating_pair_meets_in_one_point():
    for n in (1, 2, 7):
        y1, y2 = probe_pair(n)
        assert y1.set & y2.set == from_elements([n])
    with pytest.raises(DomainError):
        probe_pair(0)


class TestSigma:
    @given(computable_permutations())
    def test_order_preserving(self, s):
        f = as_oracle(RegularAutomorphism(s))
        sigma = reconstruct_order_preserving(f, 40)
        assert sigma.probe(range(1, 41)) == [s(n) for n in range(1, 41)]

    def test_window(self, pair_swap):
        sigma = reconstruct_order_preserving(RegularAutomorphism(pair_swap), 4)
        assert sigma(4) == 3
        with pytest.raises(DomainError):
            sigma(5)
        with pytest.raises(PreconditionViolated):
            reconstruct_order_preserving(RegularAutomorphism(pair_swap), 0)

    def test_reversing_has_no_singleton(self, pair_swap):
        f = RegularAutomorphism(pair_swap, flip=True)
        with pytest.raises(NotSingletonIntersection) as info:
            order_sigma(f, 1)
        assert info.value.details["size"] == "infinite"

    @given(computable_permutations())
    def test_reversing_is_detected(self, s):
        sigma, reversing = reconstruct_order_automorphism(as_oracle(RegularAutomorphism(s, flip=True)), 20)
        assert reversing
        assert sigma.probe(range(1, 21)) == [s(n) for n in range(1, 21)]

    def test_preserving_is_not_flagged(self, transposition):
        sigma, reversing = reconstruct_order_automorphism(RegularAutomorphism(transposition), 8)
        assert not reversing
        assert sigma(1) == 2


class TestPreservation:
    def test_intersections(self, pair_swap, evens_vertex):
        f = RegularAutomorphism(pair_swap)
        assert check_intersection_preservation(f, [evens_vertex, Vertex(residue_class(3, 0))])

    def test_intersection_must_be_a_vertex(self, pair_swap, evens_vertex):
        with pytest.raises(IntersectionNotVertex):
            check_intersection_preservation(RegularAutomorphism(pair_swap), [evens_vertex, Vertex(ODDS)])
        with pytest.raises(PreconditionViolated):
            check_intersection_preservation(RegularAutomorphism(pair_swap), [])

    def test_covering(self, pair_swap, evens_vertex):
        f = RegularAutomorphism(pair_swap)
        assert check_covering_preservation(f, evens_vertex, evens_vertex.remove(4))
        with pytest.raises(PreconditionViolated):
            check_covering_preservation(f, evens_vertex, evens_vertex.remove(4, 6))

    def test_inclusion(self, pair_swap, evens_vertex):
        f = RegularAutomorphism(pair_swap)
        pairs = [(evens_vertex.remove(2), evens_vertex), (evens_vertex, Vertex(ODDS))]
        assert check_order_preserving_on_samples(f, pairs).passed

    def test_non_regular_breaks_inclusion(self, evens_vertex, moved_evens):
        f, certificate = build_example_one(evens_vertex, moved_evens)
        verdict = check_order_preserving_on_samples(f, [(certificate.y, certificate.a)])
        assert not verdict.passed
        assert verdict.to_dict()["first"] == certificate.y.render()

    def test_kneser(self, pair_swap, evens_vertex, moved_evens):
        pairs = [(evens_vertex, Vertex(ODDS)), (evens_vertex, moved_evens)]
        assert check_kneser_preservation(RegularAutomorphism(pair_swap), pairs).passed
        f, _ = build_example_one(evens_vertex, moved_evens)
        verdict = check_kneser_preservation(f, pairs)
        assert not verdict.passed
        assert verdict.reason == "Kneser adjacency not preserved"

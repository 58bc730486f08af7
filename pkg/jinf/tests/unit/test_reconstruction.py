"""Tests for component reconstruction and exactification."""

import pytest
from hypothesis import given

from jinf.auto.automorphisms import (
    AutomorphismOracle,
    RegularAutomorphism,
    as_oracle,
    build_example_one,
)
from jinf.auto.reconstruction import (
    CaseTag,
    ExactifySearch,
    Inconclusive,
    base_independence_check,
    classify_case,
    exactify_permutation,
    reconstruct_component_map,
    reconstruct_sigma,
    star_triple,
    verify_restriction,
)
from jinf.core.perm import QueryBackedPermutation, identity
from jinf.core.setalg import ODDS, from_elements
from jinf.graph.johnson import Vertex, classify_clique, Star
from jinf.tests.strategies import computable_permutations, vertices
from jinf.utils.exceptions import (
    DifferentComponents,
    InconsistentOracle,
    NotCliquePreserving,
    NotSingleton,
)


class TestCases:
    def test_star_triple(self, evens_vertex):
        a, y2, y3 = star_triple(evens_vertex)
        assert a == evens_vertex
        assert y2 == Vertex(evens_vertex.set - from_elements([2]) | from_elements([1]))
        assert y3 == Vertex(evens_vertex.set - from_elements([2]) | from_elements([3]))
        assert classify_clique([a, y2, y3]) == Star(evens_vertex.remove(2))

    def test_regular(self, pair_swap, evens_vertex):
        assert classify_case(RegularAutomorphism(pair_swap), evens_vertex) is CaseTag.CASE_A
        assert classify_case(RegularAutomorphism(pair_swap, flip=True), evens_vertex) is CaseTag.CASE_B

    def test_constant_map(self, evens_vertex):
        f = AutomorphismOracle(lambda x: evens_vertex)
        with pytest.raises(NotCliquePreserving):
            classify_case(f, evens_vertex)

    def test_images_not_adjacent(self, evens_vertex):
        far = Vertex(ODDS)
        f = AutomorphismOracle(lambda x: x if x == evens_vertex else far.add(2) if 1 in x else far.remove(1))
        with pytest.raises(NotCliquePreserving):
            classify_case(f, evens_vertex)


class TestSigma:
    def test_pointwise(self, transposition, evens_vertex):
        f = RegularAutomorphism(transposition)
        assert [reconstruct_sigma(f, evens_vertex, n) for n in range(1, 5)] == [2, 1, 3, 4]

    def test_not_singleton(self, evens_vertex):
        f = AutomorphismOracle(lambda x: evens_vertex)
        with pytest.raises(NotSingleton):
            reconstruct_sigma(f, evens_vertex, 1)

    @given(computable_permutations(), vertices())
    def test_round_trip(self, s, a):
        for flip in (False, True):
            sigma, flipped = reconstruct_component_map(as_oracle(RegularAutomorphism(s, flip)), a)
            assert flipped == flip
            assert sigma.probe(range(1, 33)) == [s(n) for n in range(1, 33)]

    def test_non_regular_example(self, evens_vertex, moved_evens, transposition):
        f, _ = build_example_one(evens_vertex, moved_evens)
        sigma, flip = reconstruct_component_map(f, evens_vertex)
        assert not flip
        assert sigma.probe(range(1, 65)) == [transposition(n) for n in range(1, 65)]
        other, _ = reconstruct_component_map(f, Vertex(ODDS))
        assert other.probe(range(1, 65)) == list(range(1, 65))

    @given(computable_permutations())
    def test_base_independence(self, s):
        a = Vertex(ODDS)
        x = a.remove(1, 5).add(2, 10)
        assert base_independence_check(as_oracle(RegularAutomorphism(s)), a, x, range(1, 33))

    def test_base_independence_needs_one_component(self, pair_swap, evens_vertex):
        with pytest.raises(DifferentComponents):
            base_independence_check(RegularAutomorphism(pair_swap), evens_vertex, Vertex(ODDS), [1])


class TestRestriction:
    def test_passes(self, pair_swap, evens_vertex, moved_evens):
        f = RegularAutomorphism(pair_swap, flip=True)
        sigma, flip = reconstruct_component_map(f, evens_vertex)
        report = verify_restriction(f, sigma, flip, [evens_vertex, moved_evens])
        assert report.passed
        assert report.vertices == 2
        assert report.checked >= 128

    def test_reports_first_failure(self, pair_swap, evens_vertex):
        f = RegularAutomorphism(pair_swap)
        report = verify_restriction(f, identity(), False, [evens_vertex])
        assert not report.passed
        failure = report.failures[0]
        assert failure.vertex == "evens"
        assert failure.point == 1
        assert failure.image == 1
        assert failure.expected is False

    def test_empty_samples(self, pair_swap):
        report = verify_restriction(RegularAutomorphism(pair_swap), pair_swap, False, [])
        assert report.passed
        assert report.checked == 0


class TestExactify:
    def test_pair_swap(self, pair_swap, evens_vertex):
        sigma, _ = reconstruct_component_map(RegularAutomorphism(pair_swap), evens_vertex)
        assert exactify_permutation(sigma) == pair_swap

    def test_transposition(self, transposition):
        q = QueryBackedPermutation(transposition)
        assert exactify_permutation(q) == transposition

    def test_identity(self):
        assert exactify_permutation(QueryBackedPermutation(lambda n: n)) == identity()

    def test_search_bounds(self, pair_swap):
        result = exactify_permutation(QueryBackedPermutation(pair_swap), ExactifySearch(1, 0))
        assert isinstance(result, Inconclusive)

    def test_results_are_logged(self, transposition, events):
        exactify_permutation(QueryBackedPermutation(transposition))
        result = exactify_permutation(QueryBackedPermutation(transposition), ExactifySearch(1, 0))
        assert [action for action, _ in events] == ["exactified", "exactify_inconclusive"]
        assert events[1][1] == {"reason": result.reason}

    def test_window_too_small(self):
        result = exactify_permutation(QueryBackedPermutation(lambda n: n, window=3))
        assert isinstance(result, Inconclusive)

    def test_inconsistent_oracle(self):
        with pytest.raises(InconsistentOracle):
            exactify_permutation(QueryBackedPermutation(lambda n: 1))

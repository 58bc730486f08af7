"""Tests for the infinite Johnson graph."""

import random

import pytest
from hypothesis import given

from jinf.core.setalg import EVENS, ODDS, from_elements, residue_class
from jinf.graph import johnson
from jinf.graph.johnson import (
    NotClique,
    PairAmbiguous,
    Star,
    Top,
    Vertex,
    adjacent_johnson,
    as_vertex,
    classify_clique,
    common_neighbourhood,
    distance_johnson,
    geodesic,
    incident,
    orbit_distance,
    random_component_member,
    same_component,
    star_intersection,
    star_sample,
    star_top_intersection,
    top_intersection,
    top_sample,
)
from jinf.tests.strategies import vertices
from jinf.utils.exceptions import (
    DifferentComponents,
    DuplicateVertices,
    NotBalanced,
    NotStarOrTop,
    PreconditionViolated,
)


def swapped(base, removed, added):
    return Vertex((base.set - from_elements(removed)) | from_elements(added))


class TestVertices:
    def test_finite_sets_are_not_vertices(self):
        with pytest.raises(NotBalanced) as info:
            as_vertex(from_elements([1, 2]))
        assert info.value.details["orbit"] == "FiniteOfSize(2)"

    def test_cofinite_sets_are_not_vertices(self):
        with pytest.raises(NotBalanced):
            Vertex(~from_elements([1]))

    def test_render(self, evens_vertex):
        assert evens_vertex.render() == "evens"
        assert evens_vertex.complement() == Vertex(ODDS)


class TestDistance:
    def test_adjacent(self, evens_vertex, moved_evens):
        assert adjacent_johnson(evens_vertex, moved_evens)
        assert distance_johnson(evens_vertex, moved_evens) == 1

    def test_distance_two(self, evens_vertex):
        y = swapped(evens_vertex, [2, 4], [1, 3])
        assert distance_johnson(evens_vertex, y) == 2
        assert not adjacent_johnson(evens_vertex, y)

    def test_distance_zero(self, evens_vertex):
        assert distance_johnson(evens_vertex, evens_vertex) == 0
        assert not adjacent_johnson(evens_vertex, evens_vertex)

    def test_different_components(self, evens_vertex):
        odds = Vertex(ODDS)
        assert not same_component(evens_vertex, odds)
        with pytest.raises(DifferentComponents):
            distance_johnson(evens_vertex, odds)
        with pytest.raises(DifferentComponents):
            geodesic(evens_vertex, odds)

    def test_unequal_differences(self, evens_vertex):
        bigger = evens_vertex.add(1)
        assert not same_component(evens_vertex, bigger)

    def test_geodesic(self, evens_vertex):
        y = swapped(evens_vertex, [2, 4, 8], [1, 3, 11])
        path = geodesic(evens_vertex, y)
        assert len(path) == 4
        assert path[0] == evens_vertex and path[-1] == y
        assert all(adjacent_johnson(a, b) for a, b in zip(path, path[1:]))

    @given(vertices())
    def test_random_component_member(self, x):
        y = random_component_member(random.Random(0), x)
        assert same_component(x, y)
        assert distance_johnson(x, y) == len(geodesic(x, y)) - 1

    def test_orbit_distance(self, evens_vertex, moved_evens):
        assert orbit_distance(from_elements([1, 2]), from_elements([2, 3])) == 1
        assert orbit_distance(~from_elements([1, 2]), ~from_elements([3, 4])) == 2
        assert orbit_distance(evens_vertex.set, moved_evens.set) == 1
        with pytest.raises(PreconditionViolated):
            orbit_distance(from_elements([1]), from_elements([1, 2]))

    def test_incident(self, evens_vertex):
        assert incident(Vertex(residue_class(4, 0)), evens_vertex)
        assert incident(evens_vertex, Vertex(residue_class(4, 0)))
        assert not incident(evens_vertex, Vertex(ODDS))


class TestCliques:
    def test_star(self, evens_vertex):
        members = star_sample(evens_vertex, 3)
        assert members == [evens_vertex.add(1), evens_vertex.add(3), evens_vertex.add(5)]
        assert classify_clique(members) == Star(evens_vertex)

    def test_top(self, evens_vertex):
        members = top_sample(evens_vertex, 4)
        assert classify_clique(members) == Top(evens_vertex)

    def test_pair(self, evens_vertex, moved_evens):
        kind = classify_clique([evens_vertex, moved_evens])
        assert isinstance(kind, PairAmbiguous)
        assert kind.star_center == Vertex(EVENS - from_elements([2]))
        assert kind.top_carrier == evens_vertex.add(1)

    def test_not_clique(self, evens_vertex):
        x, y = evens_vertex.add(1), evens_vertex.remove(2)
        assert classify_clique([x, y]) == NotClique(x, y)

    def test_duplicates(self, evens_vertex):
        with pytest.raises(DuplicateVertices):
            classify_clique([evens_vertex, evens_vertex])

    def test_too_small(self, evens_vertex):
        with pytest.raises(PreconditionViolated):
            classify_clique([evens_vertex])

    def test_neither_star_nor_top(self, monkeypatch):
        monkeypatch.setattr(johnson, "adjacent_johnson", lambda x, y: True)
        members = [Vertex(EVENS), Vertex(ODDS), Vertex(residue_class(3, 0))]
        with pytest.raises(NotStarOrTop) as info:
            classify_clique(members)
        assert info.value.details["vertices"] == [v.render() for v in members]

    @given(vertices())
    def test_complement_swaps_stars_and_tops(self, x):
        stars = [v.complement() for v in star_sample(x, 3)]
        tops = [v.complement() for v in top_sample(x, 3)]
        assert classify_clique(stars) == Top(x.complement())
        assert classify_clique(tops) == Star(x.complement())


class TestIntersections:
    def test_star_and_top_intersections(self, evens_vertex, moved_evens):
        assert star_intersection(evens_vertex, moved_evens) == evens_vertex.add(1)
        assert top_intersection(evens_vertex, moved_evens) == evens_vertex.remove(2)
        far = swapped(evens_vertex, [2, 4], [1, 3])
        assert star_intersection(evens_vertex, far) is None
        assert top_intersection(evens_vertex, far) is None

    def test_star_top_intersection(self, evens_vertex):
        y = evens_vertex.add(1, 3)
        assert star_top_intersection(evens_vertex, y) == [evens_vertex.add(1), evens_vertex.add(3)]
        assert star_top_intersection(evens_vertex, evens_vertex.add(1)) == []
        assert star_top_intersection(evens_vertex, Vertex(ODDS)) == []

    def test_common_neighbourhood(self, evens_vertex, moved_evens):
        meet, join = common_neighbourhood(evens_vertex, moved_evens)
        assert meet == evens_vertex.remove(2)
        assert join == evens_vertex.add(1)
        with pytest.raises(PreconditionViolated):
            common_neighbourhood(evens_vertex, Vertex(ODDS))

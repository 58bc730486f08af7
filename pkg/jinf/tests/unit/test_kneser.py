"""Tests for the infinite Kneser graph."""

import pytest
from hypothesis import given

from jinf.core.setalg import EVENS, ODDS, from_elements, residue_class
from jinf.graph.johnson import Vertex
from jinf.graph.kneser import (
    adjacent_kneser,
    kneser_distance,
    kneser_lower_bound,
    kneser_order_duality,
    kneser_separation_witness,
)
from jinf.tests.strategies import vertices
from jinf.utils.exceptions import IsSubset


@pytest.fixture
def odds_vertex():
    return Vertex(ODDS)


def test_adjacency(evens_vertex, odds_vertex):
    assert adjacent_kneser(evens_vertex, odds_vertex)
    assert not adjacent_kneser(evens_vertex, evens_vertex)
    assert not adjacent_kneser(evens_vertex, Vertex(residue_class(4, 0)))


def test_distance_zero_and_one(evens_vertex, odds_vertex):
    assert kneser_distance(evens_vertex, evens_vertex).distance == 0
    path = kneser_distance(evens_vertex, odds_vertex)
    assert path.distance == 1
    assert path.vertices == (evens_vertex, odds_vertex)


def test_distance_two_through_outside(evens_vertex, odds_vertex):
    mult4 = Vertex(residue_class(4, 0))
    path = kneser_distance(evens_vertex, mult4)
    assert path.distance == 2
    assert path.vertices[1] == odds_vertex
    assert path.is_valid()


def test_distance_three(evens_vertex):
    y = Vertex(ODDS | from_elements([2]))
    path = kneser_distance(evens_vertex, y)
    assert path.distance == 3
    assert path.is_valid()
    assert path.vertices[1] == Vertex(ODDS)
    assert path.vertices[2] == Vertex(EVENS - from_elements([2]))


@given(vertices(), vertices())
def test_paths_are_shortest(x, y):
    path = kneser_distance(x, y)
    assert path.is_valid()
    assert path.vertices[0] == x and path.vertices[-1] == y
    assert path.distance == kneser_lower_bound(x, y)
    assert path.distance == kneser_distance(y, x).distance


def test_separation_witness(evens_vertex, odds_vertex):
    z = kneser_separation_witness(evens_vertex, odds_vertex)
    assert 2 in z
    assert adjacent_kneser(z, odds_vertex)
    assert not adjacent_kneser(z, evens_vertex)


def test_separation_needs_non_subset(evens_vertex):
    with pytest.raises(IsSubset):
        kneser_separation_witness(Vertex(residue_class(4, 0)), evens_vertex)


@given(vertices(), vertices())
def test_order_duality(x, y):
    holds, witness = kneser_order_duality(x, y)
    assert holds == x.set.is_subset(y.set)
    if not holds:
        assert adjacent_kneser(witness, y)
        assert not adjacent_kneser(witness, x)

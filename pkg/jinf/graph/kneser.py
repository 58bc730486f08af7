"""
JINF Infinite Kneser Graph

This module implements K∞ (same vertices as J∞, edges between disjoint
sets): adjacency, the distance with a validated shortest path, and the
separation witness behind X ⊆ Y ⟺ Y° ⊆ X°, where X° is the set of
Kneser neighbours of X.

Distance characterization (always realised by a path):
    d = 0  iff X = Y
    d = 1  iff X ∩ Y = ∅
    d = 2  iff X ∩ Y ≠ ∅ and ℕ ∖ (X ∪ Y) is infinite
    d = 3  otherwise
For d = 3, X ∖ Y is infinite: ℕ ∖ Y is infinite and lies in
(X ∖ Y) ∪ (ℕ ∖ (X ∪ Y)), whose second part is finite.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

from jinf.core.setalg import from_elements, split_infinite
from jinf.graph.johnson import Vertex
from jinf.utils.exceptions import IsSubset


@dataclass(frozen=True)
class KneserPath:
    """
    A shortest K∞ path.

    Attributes:
        distance: 0..3
        vertices: distance + 1 vertices from X to Y, consecutive ones disjoint
    """

    distance: int
    vertices: Tuple[Vertex, ...]

    def is_valid(self) -> bool:
        if len(self.vertices) != self.distance + 1:
            return False
        return all(adjacent_kneser(a, b) for a, b in zip(self.vertices, self.vertices[1:]))


def adjacent_kneser(x: Vertex, y: Vertex) -> bool:
    """X ∩ Y = ∅ and X ≠ Y."""
    return x != y and (x.set & y.set).is_empty()


def kneser_lower_bound(x: Vertex, y: Vertex) -> int:
    """The distance decided from the characterization alone (no path)."""
    if x == y:
        return 0
    if (x.set & y.set).is_empty():
        return 1
    if not (~(x.set | y.set)).is_finite():
        return 2
    return 3


def kneser_distance(x: Vertex, y: Vertex) -> KneserPath:
    """
    Distance in K∞ with a canonical shortest path.

    d = 2 goes through ℕ ∖ (X ∪ Y); d = 3 through ℕ ∖ X and X ∖ Y.
    """
    d = kneser_lower_bound(x, y)
    if d == 0:
        return KneserPath(0, (x,))
    if d == 1:
        return KneserPath(1, (x, y))
    if d == 2:
        return KneserPath(2, (x, Vertex(~(x.set | y.set)), y))
    return KneserPath(3, (x, x.complement(), Vertex(x.set - y.set), y))


def kneser_separation_witness(x: Vertex, y: Vertex) -> Vertex:
    """
    A vertex Z adjacent to Y but not to X, i.e. Z ∈ Y° ∖ X°.

    With z = min(X ∖ Y): Z = {z} ∪ (first half of ℕ ∖ (X ∪ Y)) when that
    complement is infinite, otherwise Z = {z} ∪ (first half of (X ∖ Y) ∖ {z}).

    Raises:
        IsSubset: If X ⊆ Y
    """
    outside = x.set - y.set
    if outside.is_empty():
        raise IsSubset(x, y)
    z = outside.min()
    single = from_elements([z])
    rest = ~(x.set | y.set)
    if rest.is_finite():
        rest = outside - single
    half, _ = split_infinite(rest)
    return Vertex(single | half)


def kneser_order_duality(x: Vertex, y: Vertex) -> Tuple[bool, Optional[Vertex]]:
    """
    Decide Y° ⊆ X° through X ⊆ Y.

    Returns:
        (True, None) when the inclusion holds, otherwise (False, Z) with Z a
        neighbour of Y that is not a neighbour of X
    """
    if x.set.is_subset(y.set):
        return True, None
    return False, kneser_separation_witness(x, y)

"""
JINF Infinite Johnson Graph

This module implements J∞ over balanced periodic sets: adjacency,
connected components, the distance law and geodesics inside a component,
star and top samplers, clique classification and the clique-intersection
facts used to tell stars from tops.

Stars and tops are infinite, so they are only exposed through their centre
or carrier and through deterministic samplers (smallest elements first).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from jinf.core import setalg
from jinf.core.setalg import (
    Finite,
    OrbitKind,
    PeriodicSet,
    classify_orbit,
    finiteness,
    from_elements,
)
from jinf.utils.exceptions import (
    DifferentComponents,
    DuplicateVertices,
    NotBalanced,
    NotProperSubset,
    NotStarOrTop,
    PreconditionViolated,
)


@dataclass(frozen=True)
class Vertex:
    """
    A vertex of J∞ and K∞: a balanced periodic set.

    Attributes:
        set: Canonical balanced PeriodicSet
    """

    set: PeriodicSet

    def __post_init__(self) -> None:
        if not self.set.is_balanced():
            raise NotBalanced(orbit_name(self.set), self.set)

    def render(self) -> str:
        return self.set.render()

    def __repr__(self) -> str:
        return f"Vertex({self.render()})"

    def __contains__(self, n: object) -> bool:
        return n in self.set

    def add(self, *ns: int) -> "Vertex":
        return Vertex(self.set | from_elements(ns))

    def remove(self, *ns: int) -> "Vertex":
        return Vertex(self.set - from_elements(ns))

    def complement(self) -> "Vertex":
        return Vertex(~self.set)


def orbit_name(s: PeriodicSet) -> str:
    try:
        return str(classify_orbit(s))
    except NotProperSubset as exc:
        return exc.details["set"]


def as_vertex(s: Union[PeriodicSet, Vertex]) -> Vertex:
    """
    Certify a set as a vertex.

    Raises:
        NotBalanced: With the orbit type found
    """
    if isinstance(s, Vertex):
        return s
    return Vertex(s)


def _difference_size(x: Vertex, y: Vertex) -> Optional[int]:
    result = finiteness(x.set - y.set)
    return result.cardinality if isinstance(result, Finite) else None


def adjacent_johnson(x: Vertex, y: Vertex) -> bool:
    """|X∖Y| = |Y∖X| = 1."""
    return _difference_size(x, y) == 1 and _difference_size(y, x) == 1


def same_component(x: Vertex, y: Vertex) -> bool:
    """|X∖Y| = |Y∖X| < ∞."""
    forward = _difference_size(x, y)
    return forward is not None and forward == _difference_size(y, x)


def distance_johnson(x: Vertex, y: Vertex) -> int:
    """
    Distance inside a component: |X∖Y|.

    Raises:
        DifferentComponents: If X and Y lie in different components
    """
    if not same_component(x, y):
        raise DifferentComponents(x, y)
    return _difference_size(x, y)


def geodesic(x: Vertex, y: Vertex) -> List[Vertex]:
    """
    A shortest path from X to Y.

    Elements of X∖Y and Y∖X are paired off in ascending order and one pair is
    swapped per step.

    Raises:
        DifferentComponents: If X and Y lie in different components
    """
    if not same_component(x, y):
        raise DifferentComponents(x, y)
    removed = finiteness(x.set - y.set).elements
    added = finiteness(y.set - x.set).elements
    path = [x]
    current = x
    for out, into in zip(removed, added):
        current = Vertex((current.set - from_elements([out])) | from_elements([into]))
        path.append(current)
    return path


def incident(x: Vertex, y: Vertex) -> bool:
    """X ⊆ Y or Y ⊆ X."""
    return x.set.is_subset(y.set) or y.set.is_subset(x.set)


def orbit_distance(s: PeriodicSet, t: PeriodicSet) -> int:
    """
    Distance in the Johnson graph on the orbit of S (finite, cofinite or
    balanced). The finite and cofinite graphs are connected; the distance is
    |S∖T| in every case.

    Raises:
        PreconditionViolated: If S and T lie in different orbits
        DifferentComponents: For balanced sets in different components
    """
    orbit_s, orbit_t = classify_orbit(s), classify_orbit(t)
    if orbit_s != orbit_t:
        raise PreconditionViolated(f"{orbit_s} and {orbit_t} are different orbits")
    if orbit_s.kind is OrbitKind.BALANCED:
        return distance_johnson(Vertex(s), Vertex(t))
    return finiteness(s - t).cardinality


# ---------------------------------------------------------------------------
# Stars and tops
# ---------------------------------------------------------------------------

def star_sample(x: Vertex, count: int, excluding: Iterable[int] = ()) -> List[Vertex]:
    """X ∪ {n} for the `count` smallest n ∉ X that are not excluded."""
    skip = set(excluding)
    outside = (n for n in (~x.set).elements() if n not in skip)
    return [x.add(n) for _, n in zip(range(count), outside)]


def top_sample(x: Vertex, count: int, excluding: Iterable[int] = ()) -> List[Vertex]:
    """X ∖ {n} for the `count` smallest n ∈ X that are not excluded."""
    skip = set(excluding)
    inside = (n for n in x.set.elements() if n not in skip)
    return [x.remove(n) for _, n in zip(range(count), inside)]


@dataclass(frozen=True)
class Star:
    """Clique inside St(center)."""
    center: Vertex


@dataclass(frozen=True)
class Top:
    """Clique inside T(carrier)."""
    carrier: Vertex


@dataclass(frozen=True)
class PairAmbiguous:
    """An edge lies in exactly one star and one top."""
    star_center: Vertex
    top_carrier: Vertex


@dataclass(frozen=True)
class NotClique:
    """Witness pair of non-adjacent members."""
    first: Vertex
    second: Vertex


CliqueKind = Union[Star, Top, PairAmbiguous, NotClique]


def classify_clique(vertices: Sequence[Vertex]) -> CliqueKind:
    """
    Classify a vertex list as part of a star or a top.

    Args:
        vertices: At least two distinct vertices

    Returns:
        NotClique with a witness if some pair is not adjacent; PairAmbiguous
        for two vertices; Star or Top for three or more

    Raises:
        DuplicateVertices: If a vertex repeats
        PreconditionViolated: If fewer than two vertices are given
        NotStarOrTop: If pairwise adjacent members share neither one
            intersection nor one union
    """
    if len(vertices) < 2:
        raise PreconditionViolated("a clique needs at least two vertices")
    seen = set()
    for v in vertices:
        if v in seen:
            raise DuplicateVertices(v)
        seen.add(v)
    for a, b in combinations(vertices, 2):
        if not adjacent_johnson(a, b):
            return NotClique(a, b)
    if len(vertices) == 2:
        a, b = vertices
        return PairAmbiguous(Vertex(a.set & b.set), Vertex(a.set | b.set))
    intersections = {a.set & b.set for a, b in combinations(vertices, 2)}
    if len(intersections) == 1:
        return Star(Vertex(intersections.pop()))
    unions = {a.set | b.set for a, b in combinations(vertices, 2)}
    if len(unions) == 1:
        return Top(Vertex(unions.pop()))
    raise NotStarOrTop(vertices)


def star_intersection(x: Vertex, y: Vertex) -> Optional[Vertex]:
    """
    St(X) ∩ St(Y) for distinct X, Y: the vertex X ∪ Y when X and Y are
    adjacent, empty (None) otherwise.
    """
    if x != y and adjacent_johnson(x, y):
        return Vertex(x.set | y.set)
    return None


def top_intersection(x: Vertex, y: Vertex) -> Optional[Vertex]:
    """T(X) ∩ T(Y) for distinct X, Y: X ∩ Y when adjacent, else None."""
    if x != y and adjacent_johnson(x, y):
        return Vertex(x.set & y.set)
    return None


def star_top_intersection(x: Vertex, y: Vertex) -> List[Vertex]:
    """
    St(X) ∩ T(Y): the two vertices X ∪ {y1}, X ∪ {y2} when X ⊂ Y and
    Y ∖ X = {y1, y2}; empty otherwise.
    """
    if not x.set.is_subset(y.set):
        return []
    extra = finiteness(y.set - x.set)
    if not isinstance(extra, Finite) or extra.cardinality != 2:
        return []
    return [x.add(n) for n in extra.elements]


def common_neighbourhood(x: Vertex, y: Vertex) -> Tuple[Vertex, Vertex]:
    """
    For adjacent X, Y the closed neighbourhoods meet in
    St(X ∩ Y) ∪ T(X ∪ Y); returns (X ∩ Y, X ∪ Y).

    Raises:
        PreconditionViolated: If X and Y are not adjacent
    """
    if not adjacent_johnson(x, y):
        raise PreconditionViolated("common neighbourhood needs adjacent vertices")
    return Vertex(x.set & y.set), Vertex(x.set | y.set)


def random_vertex(rng: random.Random, max_prefix: int = 6, max_period: int = 6) -> Vertex:
    return Vertex(setalg.random_balanced_set(rng, max_prefix, max_period))


def random_component_member(rng: random.Random, base: Vertex, max_swaps: int = 3, window: int = 24) -> Vertex:
    """Swap up to `max_swaps` small members of `base` for small non-members."""
    inside = base.set.first(window)
    outside = (~base.set).first(window)
    swaps = rng.randint(0, min(max_swaps, len(inside), len(outside)))
    removed = rng.sample(inside, swaps)
    added = rng.sample(outside, swaps)
    return Vertex((base.set - from_elements(removed)) | from_elements(added))

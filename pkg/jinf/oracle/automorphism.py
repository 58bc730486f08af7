"""
JINF Finite Automorphisms

This module counts automorphisms of small finite graphs by backtracking
and recovers, for J(n, k), the ground-set permutation behind an
automorphism.

The count assigns vertices in breadth-first order. A vertex may only go to
an unused vertex with the same signature (degree and multiset of
neighbour degrees) whose adjacency to the images of the earlier vertices
matches. No canonical-labelling library is involved, so the count is an
independent check.

The permutation recovery reduces stars: the star of a (k-1)-set B is the
clique of all vertices containing B, and an automorphism sending stars to
stars induces a map on (k-1)-sets. Repeating down to k = 1 gives the
permutation. For n = 2k a star may go to a top; the map is then composed
with the complement first and the result is flagged.
"""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from jinf.core.config import settings
from jinf.oracle.finite import FamilyKind, FiniteGraph, Label
from jinf.utils.exceptions import (
    BudgetExceeded,
    NotAutomorphism,
    NotInducedByPermutation,
    UnsupportedFamily,
)
from jinf.utils.logger import StructuredLogger

logger = StructuredLogger.get_logger()

VertexMap = Dict[Label, Label]


def _search_order(adjacency: np.ndarray) -> List[int]:
    size = adjacency.shape[0]
    seen = [False] * size
    order: List[int] = []
    for root in range(size):
        if seen[root]:
            continue
        seen[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            order.append(v)
            for u in np.flatnonzero(adjacency[v]):
                if not seen[u]:
                    seen[u] = True
                    queue.append(int(u))
    return order


def _signatures(adjacency: np.ndarray) -> List[Tuple[int, Tuple[int, ...]]]:
    degrees = adjacency.sum(axis=1)
    return [
        (int(degrees[v]), tuple(sorted(int(degrees[u]) for u in np.flatnonzero(adjacency[v]))))
        for v in range(adjacency.shape[0])
    ]


def aut_group_order(
    graph: FiniteGraph,
    max_vertices: Optional[int] = None,
    max_nodes: Optional[int] = None,
) -> int:
    """
    Exact number of adjacency-preserving bijections of the vertex set.

    Args:
        graph: Finite graph
        max_vertices: Largest accepted graph (settings.aut_max_vertices)
        max_nodes: Search-node budget (settings.aut_max_nodes)

    Returns:
        |Aut(G)|

    Raises:
        BudgetExceeded: If the graph is too large or the search runs out
            of nodes
    """
    max_vertices = settings.aut_max_vertices if max_vertices is None else max_vertices
    max_nodes = settings.aut_max_nodes if max_nodes is None else max_nodes
    if graph.order > max_vertices:
        raise BudgetExceeded("vertices", graph.order, max_vertices)

    adjacency = graph.adjacency
    size = graph.order
    signatures = _signatures(adjacency)
    by_signature: Dict[tuple, List[int]] = defaultdict(list)
    for v, signature in enumerate(signatures):
        by_signature[signature].append(v)

    order = np.array(_search_order(adjacency), dtype=np.intp)
    images = np.full(size, -1, dtype=np.intp)
    used = np.zeros(size, dtype=bool)
    nodes = 0

    def extend(depth: int) -> int:
        nonlocal nodes
        if depth == size:
            return 1
        v = int(order[depth])
        placed = order[:depth]
        total = 0
        for w in by_signature[signatures[v]]:
            if used[w]:
                continue
            nodes += 1
            if nodes > max_nodes:
                raise BudgetExceeded("search nodes", nodes, max_nodes)
            if not np.array_equal(adjacency[placed, v], adjacency[images[placed], w]):
                continue
            images[v] = w
            used[w] = True
            total += extend(depth + 1)
            used[w] = False
            images[v] = -1
        return total

    count = extend(0)
    StructuredLogger.log_event(
        "automorphisms_counted",
        {"family": str(graph.family), "count": count, "nodes": nodes},
    )
    return count


def automorphism_witness(graph: FiniteGraph, phi: Mapping[Label, Label]) -> Optional[str]:
    """None when phi is an automorphism of the graph, else the reason."""
    labels = set(graph.labels)
    if set(phi) != labels or set(phi.values()) != labels:
        return "not a bijection of the vertex set"
    for u, v in combinations(graph.labels, 2):
        if graph.adjacent(u, v) != graph.adjacent(phi[u], phi[v]):
            return f"adjacency of {list(u)} and {list(v)} not preserved"
    return None


def induced_automorphism(graph: FiniteGraph, permutation: Sequence[int]) -> VertexMap:
    """
    The vertex map X ↦ π(X) for a permutation of {1..n}.

    Args:
        graph: J(n, k) or K(n, k)
        permutation: Images of 1..n, in order
    """
    if graph.family.kind is FamilyKind.TRUNCATED:
        raise UnsupportedFamily(graph.family.kind.value, "induced_automorphism")
    if sorted(permutation) != list(range(1, graph.family.n + 1)):
        raise NotAutomorphism("not a permutation of the ground set", list(permutation))
    return {x: tuple(sorted(permutation[i - 1] for i in x)) for x in graph.labels}


def complement_map(graph: FiniteGraph) -> VertexMap:
    """
    X ↦ {1..n} ∖ X, a vertex map only when n = 2k.

    Raises:
        UnsupportedFamily: Unless the graph is J(2k, k) or K(2k, k)
    """
    family = graph.family
    if family.kind is FamilyKind.TRUNCATED or family.n != 2 * family.k:
        raise UnsupportedFamily(str(family), "complement_map")
    ground = frozenset(range(1, family.n + 1))
    return {x: tuple(sorted(ground - set(x))) for x in graph.labels}


@dataclass(frozen=True)
class InducedPermutation:
    """
    Ground-set permutation recovered from an automorphism of J(n, k).

    Attributes:
        permutation: Images of 1..n
        via_complement: The permutation induces phi composed with the
            complement (phi itself is not induced by a permutation)
        witness: (k-1)-set whose star phi sends to a top, when flagged
    """

    permutation: Tuple[int, ...]
    via_complement: bool = False
    witness: Optional[Label] = None

    def cycles(self) -> List[Tuple[int, ...]]:
        seen = set()
        result = []
        for start in range(1, len(self.permutation) + 1):
            if start in seen or self.permutation[start - 1] == start:
                continue
            cycle = [start]
            seen.add(start)
            nxt = self.permutation[start - 1]
            while nxt != start:
                cycle.append(nxt)
                seen.add(nxt)
                nxt = self.permutation[nxt - 1]
            result.append(tuple(cycle))
        return result


def _star_center(phi: Mapping[Label, Label], center: Label, n: int) -> Optional[Label]:
    members = [tuple(sorted(center + (x,))) for x in range(1, n + 1) if x not in center]
    meet = frozenset.intersection(*(frozenset(phi[m]) for m in members))
    if len(meet) != len(center):
        return None
    return tuple(sorted(meet))


def induced_permutation_finite(graph: FiniteGraph, phi: Mapping[Label, Label]) -> InducedPermutation:
    """
    The permutation of {1..n} inducing an automorphism of J(n, k).

    Args:
        graph: J(n, k)
        phi: Vertex bijection given on labels

    Returns:
        InducedPermutation; flagged when n = 2k and phi involves the
        complement, in which case the permutation induces phi ∘ *

    Raises:
        UnsupportedFamily: If the graph is not a Johnson graph
        NotAutomorphism: If phi is not an automorphism
        NotInducedByPermutation: If the recovered permutation does not
            reproduce phi
    """
    if graph.family.kind is not FamilyKind.JOHNSON:
        raise UnsupportedFamily(graph.family.kind.value, "induced_permutation_finite")
    n, k = graph.family.n, graph.family.k
    phi = {tuple(sorted(x)): tuple(sorted(y)) for x, y in phi.items()}
    reason = automorphism_witness(graph, phi)
    if reason is not None:
        raise NotAutomorphism(reason)

    via_complement = False
    witness: Optional[Label] = None
    if k >= 2:
        first = tuple(range(1, k))
        if _star_center(phi, first, n) is None:
            if n != 2 * k:
                raise NotAutomorphism("a star is sent to a top", list(first))
            star = complement_map(graph)
            phi = {x: phi[star[x]] for x in graph.labels}
            via_complement, witness = True, first
            logger.info("Automorphism involves the complement", extra={"n": n, "k": k})

    current: VertexMap = phi
    for level in range(k, 1, -1):
        reduced: VertexMap = {}
        for center in combinations(range(1, n + 1), level - 1):
            image = _star_center(current, center, n)
            if image is None:
                raise NotAutomorphism("a star is sent to a top", list(center))
            reduced[center] = image
        current = reduced

    permutation = tuple(current[(i,)][0] for i in range(1, n + 1))
    for x in graph.labels:
        if tuple(sorted(permutation[i - 1] for i in x)) != phi[x]:
            raise NotInducedByPermutation(list(x))
    return InducedPermutation(permutation, via_complement, witness)

"""
JINF Finite Ground Truth

This module builds explicit finite graphs used as oracles for the infinite
operations: the Johnson graph J(n, k), the Kneser graph K(n, k), and balls
of radius r around a vertex of a J∞ component with all changes confined to
the window [1, W].

Truncated components are faithful for distances: a geodesic between X and
Y swaps elements of X ∖ Y for elements of Y ∖ X, so it never leaves the
window the two endpoints live in.

Vertices are labelled by ascending tuples; adjacency is a symmetric numpy
boolean matrix. Shortest paths and clique enumeration go through networkx.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from jinf.core.setalg import from_elements, greater_than
from jinf.graph.johnson import Vertex
from jinf.utils.exceptions import BadParameters, UnknownVertex, UnsupportedFamily, WindowTooSmall
from jinf.utils.logger import StructuredLogger

logger = StructuredLogger.get_logger()

Label = Tuple[int, ...]


class FamilyKind(str, enum.Enum):
    """Graph families the oracle can build."""
    JOHNSON = "johnson"
    KNESER = "kneser"
    TRUNCATED = "truncated"


@dataclass(frozen=True)
class Family:
    """
    Family metadata.

    Attributes:
        kind: Graph family
        n: Ground set size (window size for truncated components)
        k: Subset size (radius for truncated components)
        base: Rendered base vertex of a truncated component
    """

    kind: FamilyKind
    n: int
    k: int
    base: Optional[str] = None

    def __str__(self) -> str:
        if self.kind is FamilyKind.TRUNCATED:
            return f"TruncatedComponent({self.base}, window={self.n}, radius={self.k})"
        name = "J" if self.kind is FamilyKind.JOHNSON else "K"
        return f"{name}({self.n},{self.k})"


@dataclass(eq=False)
class FiniteGraph:
    """
    An explicit finite graph with set labels.

    Attributes:
        labels: Vertex labels (ascending tuples), in a fixed order
        adjacency: Symmetric boolean matrix without self-loops
        family: Family metadata
        degenerate: Set for K(2k, k), which is a perfect matching
        base_vertex: Base of a truncated component
    """

    labels: Tuple[Label, ...]
    adjacency: np.ndarray
    family: Family
    degenerate: bool = False
    base_vertex: Optional[Vertex] = None
    _index: Dict[Label, int] = field(default_factory=dict, repr=False)

    def __post_init__(self) -> None:
        self._index = {label: i for i, label in enumerate(self.labels)}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteGraph):
            return NotImplemented
        if set(self.labels) != set(other.labels):
            return False
        return self.edges() == other.edges()

    @property
    def order(self) -> int:
        return len(self.labels)

    @property
    def edge_count(self) -> int:
        return int(self.adjacency.sum()) // 2

    def degrees(self) -> np.ndarray:
        return self.adjacency.sum(axis=1)

    def index_of(self, label: Iterable[int]) -> int:
        """
        Position of a label.

        Raises:
            UnknownVertex: If the label is not a vertex
        """
        key = tuple(sorted(label))
        if key not in self._index:
            raise UnknownVertex(list(key))
        return self._index[key]

    def adjacent(self, u: Iterable[int], v: Iterable[int]) -> bool:
        return bool(self.adjacency[self.index_of(u), self.index_of(v)])

    def neighbours(self, label: Iterable[int]) -> List[Label]:
        row = self.adjacency[self.index_of(label)]
        return [self.labels[j] for j in np.flatnonzero(row)]

    def edges(self) -> set:
        rows, cols = np.nonzero(np.triu(self.adjacency))
        return {frozenset((self.labels[i], self.labels[j])) for i, j in zip(rows, cols)}

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(self.labels)
        rows, cols = np.nonzero(np.triu(self.adjacency))
        graph.add_edges_from((self.labels[i], self.labels[j]) for i, j in zip(rows, cols))
        return graph

    def vertex_of(self, label: Iterable[int]) -> Vertex:
        """
        The J∞ vertex behind a truncated-component label.

        Raises:
            UnsupportedFamily: For Johnson and Kneser graphs
        """
        if self.base_vertex is None:
            raise UnsupportedFamily(self.family.kind.value, "vertex_of")
        key = tuple(sorted(label))
        self.index_of(key)
        outside = self.base_vertex.set & greater_than(self.family.n)
        return Vertex(outside | from_elements(key))


def _incidence(labels: Sequence[Label]) -> np.ndarray:
    ground = max((max(label) for label in labels if label), default=0)
    matrix = np.zeros((len(labels), ground + 1), dtype=np.float32)
    for i, label in enumerate(labels):
        matrix[i, list(label)] = 1.0
    return matrix


def _johnson_adjacency(labels: Sequence[Label]) -> np.ndarray:
    """|X ∖ Y| = |Y ∖ X| = 1, from the intersection sizes."""
    incidence = _incidence(labels)
    common = incidence @ incidence.T
    sizes = incidence.sum(axis=1)
    outside = sizes[:, None] - common
    return (outside == 1) & (outside.T == 1)


def _kneser_adjacency(labels: Sequence[Label]) -> np.ndarray:
    incidence = _incidence(labels)
    disjoint = (incidence @ incidence.T) == 0
    np.fill_diagonal(disjoint, False)
    return disjoint


def build_johnson_finite(n: int, k: int) -> FiniteGraph:
    """
    J(n, k): k-subsets of {1..n}, adjacent when they share k - 1 elements.

    Raises:
        BadParameters: Unless 1 <= k <= n - 1
    """
    if not 1 <= k <= n - 1:
        raise BadParameters("johnson", n, k)
    labels = tuple(combinations(range(1, n + 1), k))
    return FiniteGraph(labels, _johnson_adjacency(labels), Family(FamilyKind.JOHNSON, n, k))


def build_kneser_finite(n: int, k: int) -> FiniteGraph:
    """
    K(n, k): k-subsets of {1..n}, adjacent when disjoint.

    For n = 2k the graph is a perfect matching; it is built with the
    degenerate flag set.

    Raises:
        BadParameters: Unless k >= 1 and 2k <= n
    """
    if k < 1 or 2 * k > n:
        raise BadParameters("kneser", n, k)
    degenerate = 2 * k == n
    if degenerate:
        logger.warning("Degenerate Kneser graph", extra={"n": n, "k": k})
    labels = tuple(combinations(range(1, n + 1), k))
    adjacency = _kneser_adjacency(labels)
    return FiniteGraph(labels, adjacency, Family(FamilyKind.KNESER, n, k), degenerate=degenerate)


def build_truncated_component(a: Vertex, window: int, radius: int) -> FiniteGraph:
    """
    Vertices (A ∖ R) ∪ S with R ⊆ A ∩ [1, W], S ⊆ [1, W] ∖ A, |R| = |S| <= r.

    Labels are the restrictions to [1, W]; vertex_of recovers the J∞ vertex.

    Raises:
        WindowTooSmall: If A or its complement has fewer than r points in
            the window
    """
    if radius < 0 or window < 0:
        raise WindowTooSmall(window, radius)
    inside = [n for n in range(1, window + 1) if n in a]
    outside = [n for n in range(1, window + 1) if n not in a]
    if len(inside) < radius or len(outside) < radius:
        raise WindowTooSmall(window, radius)

    base = frozenset(inside)
    labels: List[Label] = []
    for size in range(radius + 1):
        for removed in combinations(inside, size):
            for added in combinations(outside, size):
                labels.append(tuple(sorted((base - set(removed)) | set(added))))
    labels.sort(key=lambda label: (len(set(label) ^ base), label))
    family = Family(FamilyKind.TRUNCATED, window, radius, base=a.render())
    graph = FiniteGraph(tuple(labels), _johnson_adjacency(labels), family, base_vertex=a)
    logger.debug("Built truncated component", extra={"family": str(family), "vertices": graph.order})
    return graph


def bfs_distance(graph: FiniteGraph, u: Iterable[int], v: Iterable[int]) -> Optional[int]:
    """
    Shortest-path length, or None when v is unreachable from u.

    Raises:
        UnknownVertex: If u or v is not a vertex
    """
    source, target = graph.labels[graph.index_of(u)], graph.labels[graph.index_of(v)]
    try:
        return nx.shortest_path_length(graph.to_networkx(), source, target)
    except nx.NetworkXNoPath:
        return None


def all_pairs_bfs(graph: FiniteGraph) -> np.ndarray:
    """
    Level-synchronous BFS from every vertex at once.

    Returns:
        Integer matrix of shortest-path lengths, -1 where unreachable
    """
    size = graph.order
    step = graph.adjacency.astype(np.float32)
    distances = np.full((size, size), -1, dtype=np.int64)
    np.fill_diagonal(distances, 0)
    reached = np.eye(size, dtype=bool)
    frontier = reached.astype(np.float32)
    level = 0
    while frontier.any():
        level += 1
        fresh = ((frontier @ step) > 0) & ~reached
        distances[fresh] = level
        reached |= fresh
        frontier = fresh.astype(np.float32)
    return distances


def label_differences(graph: FiniteGraph) -> np.ndarray:
    """Matrix of |X ∖ Y| over the labels."""
    incidence = _incidence(graph.labels)
    common = incidence @ incidence.T
    return (incidence.sum(axis=1)[:, None] - common).astype(np.int64)


class CliqueLabel(str, enum.Enum):
    STAR = "star"
    TOP = "top"
    PAIR = "pair"


@dataclass(frozen=True)
class LabelledClique:
    """
    A maximal clique with its kind.

    Attributes:
        kind: STAR (common intersection), TOP (common union) or PAIR
        members: Member labels, sorted
        anchor: Star centre or top carrier (the intersection for PAIR)
    """

    kind: CliqueLabel
    members: Tuple[Label, ...]
    anchor: Label


def _label_clique(members: Sequence[Label]) -> LabelledClique:
    sets = [frozenset(m) for m in members]
    meet = frozenset.intersection(*sets)
    ordered = tuple(sorted(members))
    if len(members) == 2:
        return LabelledClique(CliqueLabel.PAIR, ordered, tuple(sorted(meet)))
    pairwise = {a & b for a, b in combinations(sets, 2)}
    if len(pairwise) == 1:
        return LabelledClique(CliqueLabel.STAR, ordered, tuple(sorted(meet)))
    return LabelledClique(CliqueLabel.TOP, ordered, tuple(sorted(frozenset.union(*sets))))


def maximal_cliques(graph: FiniteGraph) -> List[LabelledClique]:
    """
    All maximal cliques, labelled star or top, sorted by kind and members.

    Raises:
        UnsupportedFamily: For Kneser graphs
    """
    if graph.family.kind is FamilyKind.KNESER:
        raise UnsupportedFamily(graph.family.kind.value, "maximal_cliques")
    cliques = [_label_clique(c) for c in nx.find_cliques(graph.to_networkx())]
    return sorted(cliques, key=lambda c: (c.kind.value, c.members))


def _render_label(label: Label) -> str:
    return "{" + ",".join(str(n) for n in label) + "}"


def export_adjacency(graph: FiniteGraph) -> str:
    """Adjacency list, one line per vertex: `{1,2}: {1,3} {2,3}`."""
    lines = []
    for label in graph.labels:
        neighbours = " ".join(_render_label(m) for m in graph.neighbours(label))
        lines.append(f"{_render_label(label)}: {neighbours}".rstrip())
    return "\n".join(lines)

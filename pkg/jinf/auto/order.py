"""
JINF Order Automorphisms

This module handles automorphisms of the balanced sets ordered by
inclusion. An order-preserving automorphism f is induced by a permutation
σ, recovered pointwise: the two vertices

    Y1 = {n} ∪ {m > n : m ≡ 0 (mod 3)}
    Y2 = {n} ∪ {m > n : m ≡ 1 (mod 3)}

meet exactly in {n}, so f(Y1) ∩ f(Y2) = {σ(n)}. An order-reversing f is
the complement of an order-preserving one.

Checkers test preservation of intersections, of covers, of inclusion and
of Kneser adjacency (disjointness) on sample families.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Tuple

from jinf.auto.automorphisms import Automorphism, apply_auto, complement_of
from jinf.core.perm import QueryBackedPermutation
from jinf.core.setalg import (
    Finite,
    finiteness,
    from_elements,
    greater_than,
    inter_all,
    residue_class,
)
from jinf.graph.johnson import Vertex, orbit_name
from jinf.graph.kneser import adjacent_kneser
from jinf.utils.exceptions import (
    DomainError,
    IntersectionNotVertex,
    NotSingletonIntersection,
    PreconditionViolated,
)
from jinf.utils.logger import StructuredLogger

logger = StructuredLogger.get_logger()


def probe_pair(n: int) -> Tuple[Vertex, Vertex]:
    """The two vertices meeting exactly in {n}."""
    if n < 1:
        raise DomainError(n)
    single, tail = from_elements([n]), greater_than(n)
    return (
        Vertex(single | (residue_class(3, 0) & tail)),
        Vertex(single | (residue_class(3, 1) & tail)),
    )


def order_sigma(f: Automorphism, n: int) -> int:
    """
    σ(n) for an order-preserving automorphism.

    Raises:
        NotSingletonIntersection: If f(Y1) ∩ f(Y2) is not a single element
            (size None means infinite)
    """
    y1, y2 = probe_pair(n)
    common = apply_auto(f, y1).set & apply_auto(f, y2).set
    result = finiteness(common)
    if isinstance(result, Finite):
        if result.cardinality == 1:
            return result.elements[0]
        raise NotSingletonIntersection(n, result.cardinality)
    raise NotSingletonIntersection(n, None)


def reconstruct_order_preserving(f: Automorphism, window: int) -> QueryBackedPermutation:
    """
    σ as a pointwise permutation answering for 1..window.

    Raises:
        PreconditionViolated: If the window is not positive
    """
    if window < 1:
        raise PreconditionViolated("window must be positive")
    return QueryBackedPermutation(lambda n: order_sigma(f, n), window=window)


def reconstruct_order_automorphism(
    f: Automorphism,
    window: int,
) -> Tuple[QueryBackedPermutation, bool]:
    """
    σ and the reversal flag for an order automorphism of either kind.

    f is tried first; when its probe intersection is not a singleton the
    complement of f is used and the flag is set.

    Raises:
        NotSingletonIntersection: If neither f nor its complement probes
            as order-preserving
    """
    try:
        order_sigma(f, 1)
        return reconstruct_order_preserving(f, window), False
    except NotSingletonIntersection:
        g = complement_of(f)
        order_sigma(g, 1)
        logger.debug("Order automorphism is reversing")
        return reconstruct_order_preserving(g, window), True


def check_intersection_preservation(f: Automorphism, family: Sequence[Vertex]) -> bool:
    """
    f(∩ family) = ∩ f(family).

    Raises:
        IntersectionNotVertex: If ∩ family is not balanced
        PreconditionViolated: If the family is empty
    """
    if not family:
        raise PreconditionViolated("family must be nonempty")
    meet = inter_all(v.set for v in family)
    if not meet.is_balanced():
        raise IntersectionNotVertex(orbit_name(meet))
    image = apply_auto(f, Vertex(meet)).set
    return image == inter_all(apply_auto(f, v).set for v in family)


def check_covering_preservation(f: Automorphism, x: Vertex, y: Vertex) -> bool:
    """
    Y ⊂ X with |X ∖ Y| = 1 implies the same for f(Y) and f(X).

    Raises:
        PreconditionViolated: If Y is not covered by X
    """
    gap = finiteness(x.set - y.set)
    if not y.set.is_subset(x.set) or not isinstance(gap, Finite) or gap.cardinality != 1:
        raise PreconditionViolated("Y must be X minus one element")
    fx, fy = apply_auto(f, x).set, apply_auto(f, y).set
    image_gap = finiteness(fx - fy)
    return fy.is_subset(fx) and isinstance(image_gap, Finite) and image_gap.cardinality == 1


@dataclass(frozen=True)
class OrderVerdict:
    """
    Outcome of a sampled preservation check.

    Attributes:
        passed: No violation found
        first: First vertex of the violating pair
        second: Second vertex of the violating pair
        reason: What was violated
    """

    passed: bool
    first: Optional[Vertex] = None
    second: Optional[Vertex] = None
    reason: str = ""

    def to_dict(self) -> dict:
        if self.passed:
            return {"passed": True}
        return {
            "passed": False,
            "first": self.first.render(),
            "second": self.second.render(),
            "reason": self.reason,
        }


def check_order_preserving_on_samples(
    f: Automorphism,
    pairs: Iterable[Tuple[Vertex, Vertex]],
) -> OrderVerdict:
    """X ⊆ Y ⟺ f(X) ⊆ f(Y) on every pair, in both directions."""
    for x, y in pairs:
        fx, fy = apply_auto(f, x).set, apply_auto(f, y).set
        for a, b, fa, fb in ((x, y, fx, fy), (y, x, fy, fx)):
            if a.set.is_subset(b.set) != fa.is_subset(fb):
                return OrderVerdict(False, a, b, "inclusion not preserved")
    return OrderVerdict(True)


def check_kneser_preservation(
    f: Automorphism,
    pairs: Iterable[Tuple[Vertex, Vertex]],
) -> OrderVerdict:
    """X ∩ Y = ∅ ⟺ f(X) ∩ f(Y) = ∅ on every pair."""
    for x, y in pairs:
        if adjacent_kneser(x, y) != adjacent_kneser(apply_auto(f, x), apply_auto(f, y)):
            return OrderVerdict(False, x, y, "Kneser adjacency not preserved")
    return OrderVerdict(True)

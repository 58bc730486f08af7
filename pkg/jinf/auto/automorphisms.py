"""
JINF Automorphism Types

This module defines the automorphism representations of J∞ and their
action on vertices:

- RegularAutomorphism: induced by a computable permutation, optionally
  followed by the complement map X ↦ ℕ ∖ X.
- PiecewiseAutomorphism: a permutation on each listed component, the
  identity elsewhere. A single piece moving A to another vertex B of J(A)
  is a non-regular automorphism, certified by an incident pair whose images
  are not incident.
- AutomorphismOracle: a black-box callable; nothing about it is trusted.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Optional, Sequence, Tuple, Union

from jinf.core import perm as permutations
from jinf.core.perm import ComputablePermutation
from jinf.core.setalg import PeriodicSet, finiteness, from_elements, split_infinite
from jinf.graph.johnson import Vertex, incident, same_component
from jinf.utils.exceptions import (
    EqualVertices,
    NotSameComponent,
    OracleFailure,
    PreconditionViolated,
)
from jinf.utils.logger import StructuredLogger


@dataclass(frozen=True)
class RegularAutomorphism:
    """
    X ↦ perm(X), or X ↦ ℕ ∖ perm(X) when flip is set.

    Attributes:
        perm: Inducing permutation
        flip: Apply the complement after the permutation
    """

    perm: ComputablePermutation
    flip: bool = False

    def __call__(self, x: Vertex) -> Vertex:
        return apply_auto(self, x)

    @property
    def order_preserving(self) -> bool:
        return not self.flip

    def to_spec(self) -> dict:
        return {"kind": "regular", "flip": self.flip, "perm": self.perm.to_spec()}


@dataclass(frozen=True)
class Piece:
    """A component, named by a representative, and the permutation used on it."""
    representative: Vertex
    perm: ComputablePermutation


@dataclass(frozen=True)
class PiecewiseAutomorphism:
    """
    First piece whose component contains X applies its permutation; the
    identity applies outside all listed components.

    Raises:
        PreconditionViolated: If two representatives share a component
        NotSameComponent: If a permutation moves its representative out of
            the component
    """

    pieces: Tuple[Piece, ...]

    def __post_init__(self) -> None:
        for a, b in combinations(self.pieces, 2):
            if same_component(a.representative, b.representative):
                raise PreconditionViolated("piece representatives must lie in distinct components")
        for piece in self.pieces:
            moved = Vertex(permutations.pushforward(piece.perm, piece.representative.set))
            if not same_component(moved, piece.representative):
                raise NotSameComponent(piece.representative, moved)

    def __call__(self, x: Vertex) -> Vertex:
        return apply_auto(self, x)

    def to_spec(self) -> dict:
        return {
            "kind": "piecewise",
            "pieces": [
                {"rep": p.representative.render(), "perm": p.perm.to_spec()}
                for p in self.pieces
            ],
        }


class AutomorphismOracle:
    """
    A black-box map on vertices.

    The callable may return a Vertex or a PeriodicSet; anything that is not
    a balanced set is reported as OracleFailure.

    Attributes:
        func: Callable vertex -> vertex
        domain: Optional declared component (by representative)
        name: Label used in logs and reports
        calls: Number of evaluations so far
    """

    def __init__(
        self,
        func: Callable[[Vertex], Union[Vertex, PeriodicSet]],
        domain: Optional[Vertex] = None,
        name: str = "oracle",
    ):
        self.func = func
        self.domain = domain
        self.name = name
        self.calls = 0

    def __call__(self, x: Vertex) -> Vertex:
        return apply_auto(self, x)

    def __repr__(self) -> str:
        return f"AutomorphismOracle({self.name})"


Automorphism = Union[RegularAutomorphism, PiecewiseAutomorphism, AutomorphismOracle]


def apply_auto(f: Automorphism, x: Vertex) -> Vertex:
    """
    Image of a vertex.

    Raises:
        OracleFailure: If a black box returns something that is not a vertex
    """
    if isinstance(f, RegularAutomorphism):
        image = permutations.pushforward(f.perm, x.set)
        return Vertex(~image if f.flip else image)
    if isinstance(f, PiecewiseAutomorphism):
        for piece in f.pieces:
            if same_component(x, piece.representative):
                return Vertex(permutations.pushforward(piece.perm, x.set))
        return x
    f.calls += 1
    result = f.func(x)
    if isinstance(result, Vertex):
        return result
    if isinstance(result, PeriodicSet) and result.is_balanced():
        return Vertex(result)
    StructuredLogger.log_event("oracle_failure", {"oracle": f.name, "argument": x.render()})
    raise OracleFailure(x, result)


def as_oracle(f: Automorphism, name: Optional[str] = None) -> AutomorphismOracle:
    """Wrap any automorphism as a black box (hides its structure)."""
    if isinstance(f, AutomorphismOracle):
        return f
    return AutomorphismOracle(lambda x: apply_auto(f, x), name=name or type(f).__name__)


def complement_of(f: Automorphism) -> Automorphism:
    """The map X ↦ ℕ ∖ f(X)."""
    if isinstance(f, RegularAutomorphism):
        return RegularAutomorphism(f.perm, not f.flip)
    name = getattr(f, "name", type(f).__name__)
    return AutomorphismOracle(lambda x: apply_auto(f, x).complement(), name=f"*{name}")


COMPLEMENT = RegularAutomorphism(permutations.identity(), flip=True)


@dataclass(frozen=True)
class NonRegularityCertificate:
    """
    An incident pair Y ⊂ A whose images are not incident.

    Attributes:
        a: Vertex A
        y: Proper subset Y of A
        f_a: Image of A
        f_y: Image of Y
    """

    a: Vertex
    y: Vertex
    f_a: Vertex
    f_y: Vertex

    def to_dict(self) -> dict:
        return {
            "a": self.a.render(),
            "y": self.y.render(),
            "f_a": self.f_a.render(),
            "f_y": self.f_y.render(),
        }


def swap_permutation(a: Vertex, b: Vertex) -> ComputablePermutation:
    """
    Finite-support permutation sending A to B (same component): the members
    of A ∖ B and B ∖ A are paired in ascending order and swapped.
    """
    removed = finiteness(a.set - b.set).elements
    added = finiteness(b.set - a.set).elements
    return permutations.transposition_patch(zip(removed, added))


def build_example_one(
    a: Vertex,
    b: Vertex,
) -> Tuple[PiecewiseAutomorphism, NonRegularityCertificate]:
    """
    Build the non-regular automorphism that moves A to B on J(A) and fixes
    every other component, together with its certificate.

    The certificate vertex is Y = {a} ∪ S1 with a = min(A ∖ B) and S1 the
    first half of split_infinite(A ∩ B): Y is a proper subset of A outside
    J(A), so f(Y) = Y, while f(A) = B is not incident with Y.

    Raises:
        NotSameComponent: If B ∉ J(A)
        EqualVertices: If A = B
    """
    if a == b:
        raise EqualVertices(a)
    if not same_component(a, b):
        raise NotSameComponent(a, b)

    s = swap_permutation(a, b)
    f = PiecewiseAutomorphism((Piece(a, s),))

    anchor = (a.set - b.set).min()
    half, _ = split_infinite(a.set & b.set)
    y = Vertex(from_elements([anchor]) | half)
    certificate = NonRegularityCertificate(a=a, y=y, f_a=apply_auto(f, a), f_y=apply_auto(f, y))
    StructuredLogger.log_event(
        "example_one_built",
        {"a": a.render(), "b": b.render(), "y": y.render()},
    )
    return f, certificate


def verify_certificate(f: Automorphism, cert: NonRegularityCertificate) -> bool:
    """
    Recompute the images and check Y ⊊ A, f(A) and f(Y) not incident, and
    agreement with the recorded images.
    """
    if cert.y == cert.a or not cert.y.set.is_subset(cert.a.set):
        return False
    f_a, f_y = apply_auto(f, cert.a), apply_auto(f, cert.y)
    if f_a != cert.f_a or f_y != cert.f_y:
        return False
    return incident(cert.a, cert.y) and not incident(f_a, f_y)


def apply_all(f: Automorphism, vertices: Sequence[Vertex]) -> Tuple[Vertex, ...]:
    return tuple(apply_auto(f, v) for v in vertices)

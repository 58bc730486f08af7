"""
JINF Component Reconstruction

This module recovers, from black-box access to an automorphism f of J∞,
the permutation σ of ℕ that f induces on one component J(A):

1. classify_case decides whether f sends a star clique around A to a star
   (case A) or to a top (case B). In case B the complement of f is used.
2. reconstruct_sigma reads σ(n) off the single element by which the images
   of two adjacent vertices differ.
3. verify_restriction checks f(U) = σ(U) (or its complement) on samples.

σ does not depend on the base vertex chosen inside the component, which
base_independence_check probes. exactify_permutation tries to turn a
pointwise σ into a finite description.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Tuple, Union

from jinf.auto.automorphisms import Automorphism, apply_auto, complement_of
from jinf.core import perm as permutations
from jinf.core.config import settings
from jinf.core.perm import ComputablePermutation, QueryBackedPermutation, RawPermutation
from jinf.core.setalg import Finite, finiteness, from_elements
from jinf.graph.johnson import NotClique, Star, Top, Vertex, classify_clique, same_component
from jinf.utils.exceptions import (
    DifferentComponents,
    DomainError,
    DuplicateVertices,
    JINFException,
    MalformedRepresentation,
    NotCliquePreserving,
    NotInjective,
    NotSingleton,
    NotSurjective,
    ResidueMapNotBijective,
)
from jinf.utils.logger import StructuredLogger
from jinf.utils.responses import RestrictionFailure, RestrictionReport

logger = StructuredLogger.get_logger()


class CaseTag(str, enum.Enum):
    """Whether f keeps stars as stars (A) or swaps them with tops (B)."""
    CASE_A = "CaseA"
    CASE_B = "CaseB"


def star_triple(a: Vertex) -> Tuple[Vertex, Vertex, Vertex]:
    """
    Three vertices of St(A ∖ {min A}): A and (A ∖ {min A}) ∪ {n} for the
    two smallest n ∉ A.
    """
    smallest = a.set.min()
    n1, n2 = (~a.set).first(2)
    core = a.set - from_elements([smallest])
    return a, Vertex(core | from_elements([n1])), Vertex(core | from_elements([n2]))


def classify_case(f: Automorphism, a: Vertex) -> CaseTag:
    """
    Decide whether f maps stars near A to stars or to tops.

    Raises:
        NotCliquePreserving: If the images of the star triple are not a
            3-clique
    """
    images = [apply_auto(f, v) for v in star_triple(a)]
    try:
        kind = classify_clique(images)
    except DuplicateVertices as exc:
        raise NotCliquePreserving("images repeat", exc.details.get("vertex")) from exc
    if isinstance(kind, NotClique):
        raise NotCliquePreserving("images are not adjacent", [kind.first, kind.second])
    if isinstance(kind, Star):
        return CaseTag.CASE_A
    if isinstance(kind, Top):
        return CaseTag.CASE_B
    raise NotCliquePreserving("images do not determine a star or a top")


class _SigmaProbe:
    """Evaluates σ(n) for an order-preserving-on-stars map g around A."""

    def __init__(self, g: Automorphism, a: Vertex):
        self.g = g
        self.a = a
        self.smallest = a.set.min()
        self.outside = (~a.set).min()
        self.image_a = apply_auto(g, a)

    def __call__(self, n: int) -> int:
        if n < 1:
            raise DomainError(n)
        if n in self.a:
            y = Vertex((self.a.set - from_elements([n])) | from_elements([self.outside]))
            difference = self.image_a.set - apply_auto(self.g, y).set
        else:
            y = Vertex((self.a.set | from_elements([n])) - from_elements([self.smallest]))
            difference = apply_auto(self.g, y).set - self.image_a.set
        result = finiteness(difference)
        if isinstance(result, Finite) and result.cardinality == 1:
            return result.elements[0]
        raise NotSingleton(difference, n)


def reconstruct_sigma(f: Automorphism, a: Vertex, n: int) -> int:
    """
    σ(n) for an automorphism f in case A at base A.

    Args:
        f: Automorphism that maps stars to stars around A
        a: Base vertex
        n: Argument (1-based)

    Returns:
        σ(n)

    Raises:
        NotSingleton: If the image difference is not a single element
        DomainError: If n < 1
    """
    return _SigmaProbe(f, a)(n)


def _oriented(f: Automorphism, a: Vertex) -> Tuple[Automorphism, bool]:
    case = classify_case(f, a)
    if case is CaseTag.CASE_B:
        return complement_of(f), True
    return f, False


def reconstruct_component_map(
    f: Automorphism,
    a: Vertex,
    window: Optional[int] = None,
) -> Tuple[QueryBackedPermutation, bool]:
    """
    The permutation induced on J(A), with the complement flag.

    In case B, σ is reconstructed from X ↦ ℕ ∖ f(X) and the flag is set, so
    that f(U) = ℕ ∖ σ(U) on the component.

    Returns:
        (σ as a QueryBackedPermutation, flip)

    Raises:
        NotCliquePreserving: If the case cannot be decided
    """
    g, flip = _oriented(f, a)
    probe = _SigmaProbe(g, a)
    logger.debug("Reconstructing component map", extra={"base": a.render(), "flip": flip})
    return QueryBackedPermutation(probe, window=window), flip


def base_independence_check(
    f: Automorphism,
    a: Vertex,
    x: Vertex,
    ns: Iterable[int],
) -> bool:
    """
    Compare σ reconstructed at base A and at base X ∈ J(A) on the given n.

    Raises:
        DifferentComponents: If X ∉ J(A)
    """
    if not same_component(a, x):
        raise DifferentComponents(a, x)
    g, _ = _oriented(f, a)
    at_a, at_x = _SigmaProbe(g, a), _SigmaProbe(g, x)
    return all(at_a(n) == at_x(n) for n in ns)


def verify_restriction(
    f: Automorphism,
    sigma: Union[QueryBackedPermutation, ComputablePermutation],
    flip: bool,
    samples: Sequence[Vertex],
) -> RestrictionReport:
    """
    Check f(U) = σ(U), or ℕ ∖ σ(U) when flip is set, for each sample U.

    For each U every n up to max(verify_window, 2(L + p)) is checked, plus
    every n already memoized by σ. The first failing point of each vertex is
    reported.

    Returns:
        RestrictionReport (empty when there are no samples)
    """
    report = RestrictionReport(vertices=len(samples))
    for u in samples:
        try:
            image = apply_auto(f, u).set
        except JINFException as exc:
            report.failures.append(RestrictionFailure(vertex=u.render(), reason=exc.message))
            continue
        window = max(settings.verify_window, 2 * (u.set.prefix_len + u.set.period_len))
        points = list(range(1, window + 1))
        if isinstance(sigma, QueryBackedPermutation):
            points.extend(n for n in sigma.memoized() if n > window)
        for n in points:
            report.checked += 1
            try:
                m = sigma(n)
            except JINFException as exc:
                report.failures.append(
                    RestrictionFailure(vertex=u.render(), point=n, reason=exc.message)
                )
                break
            expected = (n in u) != flip
            if (m in image) != expected:
                report.failures.append(
                    RestrictionFailure(vertex=u.render(), point=n, image=m, expected=expected)
                )
                break
    logger.debug(
        "Restriction verified",
        extra={"checked": report.checked, "failures": len(report.failures)},
    )
    return report


# ---------------------------------------------------------------------------
# Exactification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ExactifySearch:
    """Search bounds for exactify_permutation."""
    max_modulus: int = settings.exactify_max_modulus
    max_threshold: int = settings.exactify_max_threshold


@dataclass(frozen=True)
class Inconclusive:
    """No residue-affine description was found within the search bounds."""
    reason: str


def _candidate(q: QueryBackedPermutation, p: int, threshold: int) -> Optional[ComputablePermutation]:
    shifts = [0] * p
    for n in range(threshold + 1, threshold + p + 1):
        shifts[n % p] = q(n) - n
    spread = max(abs(d) for d in shifts)
    end = threshold + 4 * p * (spread // p + 1)
    if any(q(n) != n + shifts[n % p] for n in range(threshold + 1, end + 1)):
        return None
    classes = []
    for r, d in enumerate(shifts):
        target = (r + d) % p
        classes.append((target, (d - (target - r)) // p))
    patch = {n: q(n) for n in range(1, threshold + 1)}
    try:
        candidate = permutations.validate(RawPermutation(threshold, p, classes, patch))
    except (NotInjective, NotSurjective, ResidueMapNotBijective, MalformedRepresentation):
        return None
    if any(q(n) != candidate(n) for n in range(1, 2 * end + 1)):
        return None
    return candidate


def exactify_permutation(
    q: QueryBackedPermutation,
    search: Optional[ExactifySearch] = None,
) -> Union[ComputablePermutation, Inconclusive]:
    """
    Find a ComputablePermutation agreeing with q on a checked window.

    Moduli are tried in ascending order, then thresholds; the first
    description that agrees with q on the verification window and on a
    window twice as long is returned in normal form.

    Returns:
        ComputablePermutation, or Inconclusive when nothing fits the bounds

    Raises:
        InconsistentOracle: If q contradicts itself while being probed
    """
    search = search or ExactifySearch()
    try:
        for p in range(1, search.max_modulus + 1):
            for threshold in range(0, search.max_threshold + 1):
                candidate = _candidate(q, p, threshold)
                if candidate is not None:
                    StructuredLogger.log_event(
                        "exactified",
                        {"modulus": candidate.modulus, "threshold": candidate.threshold},
                    )
                    return candidate
    except DomainError as exc:
        result = Inconclusive(f"oracle refused an argument: {exc.message}")
    else:
        result = Inconclusive(
            f"no description with modulus <= {search.max_modulus} "
            f"and threshold <= {search.max_threshold}"
        )
    StructuredLogger.log_event("exactify_inconclusive", {"reason": result.reason})
    return result

"""
JINF Verification Suite

This module runs the property checks that gate a build. Each check is a
function registered under a dotted name; it receives a SuiteContext with
its own deterministic random generator and returns None on success or a
witness dictionary describing the first violation. A JINFException raised
by a check is reported as an error with its payload.

Checks are independent, so they may run concurrently; the report lists
them sorted by name, and identical seeds give identical reports apart from
timings.
"""

from __future__ import annotations

import math
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, permutations as orderings
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np

from jinf.auto.automorphisms import (
    RegularAutomorphism,
    as_oracle,
    build_example_one,
    swap_permutation,
    verify_certificate,
)
from jinf.auto.order import (
    check_covering_preservation,
    check_intersection_preservation,
    check_kneser_preservation,
    check_order_preserving_on_samples,
    order_sigma,
    reconstruct_order_automorphism,
    reconstruct_order_preserving,
)
from jinf.auto.reconstruction import (
    CaseTag,
    base_independence_check,
    classify_case,
    reconstruct_component_map,
    verify_restriction,
)
from jinf.core import perm as permutations
from jinf.core import setalg
from jinf.core.config import settings
from jinf.core.perm import ComputablePermutation, RandomPermutationConfig
from jinf.core.setalg import EVENS, ODDS, PeriodicSet, from_elements
from jinf.graph.johnson import (
    Star,
    Top,
    Vertex,
    adjacent_johnson,
    classify_clique,
    distance_johnson,
    random_component_member,
    random_vertex,
    same_component,
    star_sample,
    top_sample,
)
from jinf.graph.kneser import adjacent_kneser, kneser_distance, kneser_lower_bound
from jinf.oracle.automorphism import aut_group_order, induced_automorphism, induced_permutation_finite
from jinf.oracle.finite import (
    CliqueLabel,
    all_pairs_bfs,
    build_johnson_finite,
    build_kneser_finite,
    build_truncated_component,
    label_differences,
    maximal_cliques,
)
from jinf.utils.exceptions import JINFException, NoChecksSelected, NotSingletonIntersection
from jinf.utils.logger import StructuredLogger, set_run_id
from jinf.utils.responses import CheckResult, SuiteReport

logger = StructuredLogger.get_logger()

Witness = Optional[Dict[str, object]]
CheckFn = Callable[["SuiteContext"], Witness]

CHECKS: Dict[str, CheckFn] = {}
CHECK_TAGS: Dict[str, Tuple[str, ...]] = {}

MUTANTS = ("adjacency",)


def register(name: str, *tags: str) -> Callable[[CheckFn], CheckFn]:
    """Register a check under a dotted name and the result tags it covers."""
    def decorator(fn: CheckFn) -> CheckFn:
        CHECKS[name] = fn
        CHECK_TAGS[name] = tags
        return fn
    return decorator


@dataclass
class SuiteConfig:
    """
    Suite parameters; the defaults come from settings.

    Attributes:
        seed: Base seed; each check derives its own generator from it
        filter: Substring a check name must contain to run
        workers: Concurrent checks
        mutant: Name of a deliberate defect to inject (mutation smoke test)
    """

    seed: int = settings.suite_seed
    filter: Optional[str] = None
    workers: int = settings.suite_workers
    mutant: Optional[str] = None
    regular_trials: int = settings.suite_regular_trials
    sigma_range: int = settings.suite_sigma_range
    base_trials: int = settings.suite_base_trials
    base_range: int = settings.suite_base_range
    order_trials: int = settings.suite_order_trials
    preservation_trials: int = settings.suite_preservation_trials
    kneser_pairs: int = settings.suite_kneser_pairs
    algebra_trials: int = settings.suite_algebra_trials
    permutation_trials: int = settings.suite_permutation_trials
    pushforward_trials: int = settings.suite_pushforward_trials
    permutation_window: int = settings.permutation_window
    membership_window: int = settings.membership_window
    truncated_window: int = 16
    truncated_radius: int = 3
    aut_families: Tuple[Tuple[str, int, int, int], ...] = (
        ("johnson", 5, 2, 120),
        ("johnson", 6, 3, 1440),
        ("kneser", 5, 2, 120),
    )
    induced_n: int = 5


@dataclass
class SuiteContext:
    """
    What a check may use.

    Attributes:
        rng: Generator seeded from the suite seed and the check name
        config: Suite parameters
        adjacent: J∞ adjacency predicate (replaced by the adjacency mutant)
    """

    rng: random.Random
    config: SuiteConfig
    adjacent: Callable[[Vertex, Vertex], bool] = field(default=adjacent_johnson)

    def random_perm(self) -> ComputablePermutation:
        return permutations.random_permutation(RandomPermutationConfig(
            max_modulus=settings.random_max_modulus,
            max_offset=settings.random_max_offset,
            max_patch=settings.random_max_patch,
            seed=self.rng.randrange(2 ** 32),
        ))


def _mutant_adjacency(x: Vertex, y: Vertex) -> bool:
    return not adjacent_johnson(x, y)


def _first_mismatch(got: Callable[[int], int], expected: Callable[[int], int], upto: int) -> Optional[int]:
    for n in range(1, upto + 1):
        if got(n) != expected(n):
            return n
    return None


# ---------------------------------------------------------------------------
# Component reconstruction
# ---------------------------------------------------------------------------

@register("reconstruct.regular_round_trip", "theorem1", "acceptance1")
def check_regular_round_trip(ctx: SuiteContext) -> Witness:
    for trial in range(ctx.config.regular_trials):
        s = ctx.random_perm()
        flip = ctx.rng.random() < 0.5
        f = as_oracle(RegularAutomorphism(s, flip))
        a = random_vertex(ctx.rng)
        case = classify_case(f, a)
        if (case is CaseTag.CASE_B) != flip:
            return {"trial": trial, "perm": s.to_spec(), "base": a.render(), "flip": flip, "case": case.value}
        sigma, flipped = reconstruct_component_map(f, a)
        n = _first_mismatch(sigma, s, ctx.config.sigma_range)
        if n is not None or flipped != flip:
            return {"trial": trial, "perm": s.to_spec(), "base": a.render(), "n": n,
                    "got": sigma(n) if n else None, "expected": s(n) if n else None}
    return None


@register("reconstruct.non_regular", "theorem1", "example1", "acceptance2")
def check_non_regular(ctx: SuiteContext) -> Witness:
    a = Vertex(EVENS)
    b = Vertex((EVENS - from_elements([2])) | from_elements([1]))
    f, certificate = build_example_one(a, b)
    s = swap_permutation(a, b)
    sigma, flip = reconstruct_component_map(f, a)
    n = _first_mismatch(sigma, s, ctx.config.sigma_range)
    if n is not None or flip:
        return {"component": a.render(), "n": n, "flip": flip}
    others = 0
    while others < 5:
        x = random_vertex(ctx.rng)
        if same_component(x, a):
            continue
        others += 1
        tau, flip = reconstruct_component_map(f, x)
        n = _first_mismatch(tau, lambda m: m, ctx.config.sigma_range)
        if n is not None or flip:
            return {"component": x.render(), "n": n, "expected": "identity"}
    if not verify_certificate(f, certificate):
        return {"certificate": certificate.to_dict(), "reason": "certificate rejected"}
    pairs = [(certificate.y, certificate.a)]
    verdict = check_order_preserving_on_samples(f, pairs)
    if verdict.passed:
        return {"certificate": certificate.to_dict(), "reason": "no order violation found"}
    report = verify_restriction(f, sigma, False, [a, b])
    if not report.passed:
        return {"restriction": report.model_dump()}
    return None


@register("reconstruct.base_independence", "lemma3", "acceptance3")
def check_base_independence(ctx: SuiteContext) -> Witness:
    ns = range(1, ctx.config.base_range + 1)
    for trial in range(ctx.config.base_trials):
        s = ctx.random_perm()
        f = as_oracle(RegularAutomorphism(s, ctx.rng.random() < 0.5))
        a = random_vertex(ctx.rng)
        x = random_component_member(ctx.rng, a)
        y = random_component_member(ctx.rng, a)
        if not base_independence_check(f, x, y, ns):
            return {"trial": trial, "perm": s.to_spec(), "bases": [x.render(), y.render()]}
    return None


# ---------------------------------------------------------------------------
# Order automorphisms
# ---------------------------------------------------------------------------

@register("order.reconstruct", "theorem2", "acceptance4")
def check_order_reconstruct(ctx: SuiteContext) -> Witness:
    upto = ctx.config.sigma_range
    for trial in range(ctx.config.order_trials):
        s = ctx.random_perm()
        sigma = reconstruct_order_preserving(as_oracle(RegularAutomorphism(s)), upto)
        n = _first_mismatch(sigma, s, upto)
        if n is not None:
            return {"trial": trial, "perm": s.to_spec(), "n": n, "got": sigma(n), "expected": s(n)}
    return None


@register("order.reversing_detected", "theorem2", "acceptance4")
def check_order_reversing(ctx: SuiteContext) -> Witness:
    for trial in range(ctx.config.order_trials):
        s = ctx.random_perm()
        f = as_oracle(RegularAutomorphism(s, flip=True))
        raised = False
        for n in range(1, 9):
            try:
                order_sigma(f, n)
            except NotSingletonIntersection:
                raised = True
                break
        if not raised:
            return {"trial": trial, "perm": s.to_spec(), "reason": "every probe gave a singleton"}
        sigma, reversing = reconstruct_order_automorphism(f, ctx.config.sigma_range)
        n = _first_mismatch(sigma, s, ctx.config.sigma_range)
        if not reversing or n is not None:
            return {"trial": trial, "perm": s.to_spec(), "n": n, "reversing": reversing}
    return None


def _admissible_family(ctx: SuiteContext) -> List[Vertex]:
    while True:
        x, y = random_vertex(ctx.rng), random_vertex(ctx.rng)
        if (x.set & y.set).is_balanced():
            return [x, y]


@register("order.preservation", "theorem2", "acceptance4")
def check_preservation(ctx: SuiteContext) -> Witness:
    for trial in range(ctx.config.preservation_trials):
        f = as_oracle(RegularAutomorphism(ctx.random_perm()))
        family = _admissible_family(ctx)
        if not check_intersection_preservation(f, family):
            return {"trial": trial, "kind": "intersection", "family": [v.render() for v in family]}
        x = family[0]
        removed = ctx.rng.choice(x.set.first(8))
        y = x.remove(removed)
        if not check_covering_preservation(f, x, y):
            return {"trial": trial, "kind": "covering", "x": x.render(), "y": y.render()}
        verdict = check_order_preserving_on_samples(f, [(y, x), tuple(family)])
        if not verdict.passed:
            return {"trial": trial, "kind": "inclusion", **verdict.to_dict()}
    return None


@register("order.kneser_preservation")
def check_kneser_automorphisms(ctx: SuiteContext) -> Witness:
    for trial in range(ctx.config.order_trials):
        f = as_oracle(RegularAutomorphism(ctx.random_perm()))
        x = random_vertex(ctx.rng)
        pairs = [(x, x.complement()), (x, random_vertex(ctx.rng))]
        verdict = check_kneser_preservation(f, pairs)
        if not verdict.passed:
            return {"trial": trial, **verdict.to_dict()}
    return None


# ---------------------------------------------------------------------------
# Graphs
# ---------------------------------------------------------------------------

@register("graph.truncated_distance", "acceptance6")
def check_truncated_distance(ctx: SuiteContext) -> Witness:
    base = Vertex(EVENS)
    graph = build_truncated_component(base, ctx.config.truncated_window, ctx.config.truncated_radius)
    bfs = all_pairs_bfs(graph)
    differences = label_differences(graph)
    mismatch = np.argwhere(bfs != differences)
    if mismatch.size:
        i, j = mismatch[0]
        return {"x": list(graph.labels[i]), "y": list(graph.labels[j]),
                "bfs": int(bfs[i, j]), "difference": int(differences[i, j])}
    # the infinite-side operations agree with the labels on sampled pairs
    for _ in range(min(2000, graph.order ** 2)):
        i, j = ctx.rng.randrange(graph.order), ctx.rng.randrange(graph.order)
        x, y = graph.vertex_of(graph.labels[i]), graph.vertex_of(graph.labels[j])
        if distance_johnson(x, y) != bfs[i, j]:
            return {"x": x.render(), "y": y.render(), "bfs": int(bfs[i, j]), "distance": distance_johnson(x, y)}
        if ctx.adjacent(x, y) != bool(graph.adjacency[i, j]):
            return {"x": x.render(), "y": y.render(), "oracle_adjacent": bool(graph.adjacency[i, j])}
    return None


@register("graph.clique_classification", "lemma1")
def check_clique_classification(ctx: SuiteContext) -> Witness:
    for trial in range(ctx.config.base_trials):
        x = random_vertex(ctx.rng)
        members = star_sample(x, 4)
        if any(not ctx.adjacent(a, b) for a, b in combinations(members, 2)):
            return {"trial": trial, "star_center": x.render(), "reason": "star members not adjacent"}
        kind = classify_clique(members)
        if not isinstance(kind, Star) or kind.center != x:
            return {"trial": trial, "star_center": x.render(), "kind": type(kind).__name__}
        members = top_sample(x, 4)
        kind = classify_clique(members)
        if not isinstance(kind, Top) or kind.carrier != x:
            return {"trial": trial, "top_carrier": x.render(), "kind": type(kind).__name__}
    return None


@register("kneser.distance", "acceptance7")
def check_kneser_distance(ctx: SuiteContext) -> Witness:
    seen = set()
    x3 = Vertex(EVENS)
    y3 = Vertex(ODDS | from_elements([2]))
    pairs = [(x3, y3)] + [
        (random_vertex(ctx.rng), random_vertex(ctx.rng)) for _ in range(ctx.config.kneser_pairs)
    ]
    for x, y in pairs:
        path = kneser_distance(x, y)
        seen.add(path.distance)
        if not path.is_valid() or path.vertices[0] != x or path.vertices[-1] != y:
            return {"x": x.render(), "y": y.render(), "reason": "invalid path"}
        d = path.distance
        if d != kneser_lower_bound(x, y):
            return {"x": x.render(), "y": y.render(), "distance": d}
        if d >= 2 and adjacent_kneser(x, y):
            return {"x": x.render(), "y": y.render(), "reason": "adjacent pair at distance >= 2"}
        if d == 3 and not (~(x.set | y.set)).is_finite():
            return {"x": x.render(), "y": y.render(), "reason": "common neighbour exists"}
    if 3 not in seen:
        return {"reason": "no pair at distance 3"}
    return None


# ---------------------------------------------------------------------------
# Finite oracles
# ---------------------------------------------------------------------------

@register("oracle.aut_order", "acceptance5")
def check_aut_order(ctx: SuiteContext) -> Witness:
    for family, n, k, expected in ctx.config.aut_families:
        build = build_johnson_finite if family == "johnson" else build_kneser_finite
        count = aut_group_order(build(n, k))
        if count != expected:
            return {"family": family, "n": n, "k": k, "count": count, "expected": expected}
    return None


@register("oracle.cliques", "acceptance5")
def check_cliques(ctx: SuiteContext) -> Witness:
    n, k = 5, 2
    cliques = maximal_cliques(build_johnson_finite(n, k))
    stars = [c for c in cliques if c.kind is CliqueLabel.STAR]
    tops = [c for c in cliques if c.kind is CliqueLabel.TOP]
    expected = (math.comb(n, k - 1), math.comb(n, k + 1))
    sizes_ok = all(len(c.members) == n - k + 1 for c in stars) and all(len(c.members) == k + 1 for c in tops)
    if (len(stars), len(tops)) != expected or len(cliques) != sum(expected) or not sizes_ok:
        return {"stars": len(stars), "tops": len(tops), "expected": list(expected)}
    return None


@register("oracle.induced_permutation", "acceptance5")
def check_induced_permutation(ctx: SuiteContext) -> Witness:
    n = ctx.config.induced_n
    graph = build_johnson_finite(n, 2)
    for images in orderings(range(1, n + 1)):
        recovered = induced_permutation_finite(graph, induced_automorphism(graph, images))
        if recovered.permutation != images or recovered.via_complement:
            return {"permutation": list(images), "recovered": list(recovered.permutation)}
    return None


# ---------------------------------------------------------------------------
# Core algebra
# ---------------------------------------------------------------------------

def _window(*sets: PeriodicSet) -> int:
    horizon = sum(s.prefix_len for s in sets) + 2 * math.lcm(*(s.period_len for s in sets))
    return min(horizon, settings.membership_window)


def _raw_bit(prefix: List[bool], block: List[bool], n: int) -> bool:
    if n <= len(prefix):
        return prefix[n - 1]
    return block[(n - len(prefix) - 1) % len(block)]


def _raw_canonicalization(ctx: SuiteContext) -> Witness:
    prefix = [ctx.rng.random() < 0.5 for _ in range(ctx.rng.randint(0, 8))]
    # repeated blocks force the period to shrink
    block = [ctx.rng.random() < 0.5 for _ in range(ctx.rng.randint(1, 4))] * ctx.rng.randint(1, 3)
    raw = {"L": len(prefix), "prefix": [int(b) for b in prefix], "p": len(block), "block": [int(b) for b in block]}
    canonical = setalg.from_raw(raw["L"], raw["prefix"], raw["p"], raw["block"])
    for n in range(1, len(prefix) + 2 * len(block) + 1):
        if (n in canonical) != _raw_bit(prefix, block, n):
            return {"law": "raw canonicalization", "raw": raw, "n": n}
    if canonical.prefix_len > len(prefix) or len(block) % canonical.period_len:
        return {"law": "canonical size", "raw": raw, "set": canonical.render()}
    return None


@register("algebra.set_laws", "acceptance8")
def check_set_laws(ctx: SuiteContext) -> Witness:
    for trial in range(ctx.config.algebra_trials):
        witness = _raw_canonicalization(ctx)
        if witness is not None:
            return {"trial": trial, **witness}
        a, b, c = (setalg.random_periodic_set(ctx.rng) for _ in range(3))
        unrolled = setalg.canonicalize(a.prefix + a.period, a.period + a.period)
        if unrolled != a or unrolled.prefix != a.prefix or unrolled.period != a.period:
            return {"trial": trial, "law": "canonical form", "set": a.render()}
        laws = {
            "de morgan": (~(a | b), ~a & ~b),
            "distributivity": (a & (b | c), (a & b) | (a & c)),
            "difference": (a - b, a & ~b),
            "symmetric difference": (a ^ b, (a - b) | (b - a)),
            "double complement": (~~a, a),
        }
        for law, (left, right) in laws.items():
            if left != right:
                return {"trial": trial, "law": law, "sets": [a.render(), b.render(), c.render()]}
        union = a | b
        for n in range(1, _window(a, b) + 1):
            if (n in union) != (n in a or n in b):
                return {"trial": trial, "law": "union membership", "n": n}
    return None


@register("algebra.pushforward", "acceptance8")
def check_pushforward(ctx: SuiteContext) -> Witness:
    for trial in range(ctx.config.pushforward_trials):
        s = ctx.random_perm()
        subset = setalg.random_periodic_set(ctx.rng)
        image = permutations.pushforward(s, subset)
        horizon = max(s.threshold, subset.prefix_len) + 2 * math.lcm(s.modulus, subset.period_len)
        for n in range(1, min(horizon, ctx.config.membership_window) + 1):
            if (s(n) in image) != (n in subset):
                return {"trial": trial, "perm": s.to_spec(), "set": subset.render(), "n": n}
    return None


@register("perm.consistency", "acceptance8")
def check_permutation_consistency(ctx: SuiteContext) -> Witness:
    window = ctx.config.permutation_window
    for trial in range(ctx.config.permutation_trials):
        s, t = ctx.random_perm(), ctx.random_perm()
        st = permutations.compose(s, t)
        inverse = permutations.invert(s)
        images = set()
        for n in range(1, window + 1):
            if st(n) != s(t(n)):
                return {"trial": trial, "law": "compose", "n": n, "s": s.to_spec(), "t": t.to_spec()}
            if inverse(s(n)) != n or permutations.apply_inverse(s, s(n)) != n:
                return {"trial": trial, "law": "invert", "n": n, "s": s.to_spec()}
            images.add(s(n))
        if len(images) != window:
            return {"trial": trial, "law": "injective", "s": s.to_spec()}
        raw = permutations.RawPermutation(s.threshold, s.modulus, s.classes, dict(s.patch))
        if permutations.validate(raw) != s:
            return {"trial": trial, "law": "normal form", "s": s.to_spec()}
    return None


# ---------------------------------------------------------------------------
# Runner
# ---------------------------------------------------------------------------

def selected_checks(name_filter: Optional[str] = None) -> List[str]:
    """Checks whose name contains the filter or that carry it as a tag."""
    if not name_filter:
        return sorted(CHECKS)
    return sorted(
        name for name in CHECKS
        if name_filter in name or name_filter in CHECK_TAGS[name]
    )


def _run_check(name: str, config: SuiteConfig) -> CheckResult:
    set_run_id(f"suite-{config.seed}-{name}")
    ctx = SuiteContext(rng=random.Random(f"{config.seed}:{name}"), config=config)
    if config.mutant == "adjacency":
        ctx.adjacent = _mutant_adjacency
    start = time.perf_counter()
    try:
        witness = CHECKS[name](ctx)
        status = "pass" if witness is None else "fail"
        payload = witness or {}
    except JINFException as exc:
        status, payload = "error", exc.to_dict()
        StructuredLogger.log_error(exc, {"check": name})
    except Exception as exc:
        status = "error"
        payload = {"error": type(exc).__name__, "message": str(exc)}
        StructuredLogger.log_error(exc, {"check": name})
    duration_ms = (time.perf_counter() - start) * 1000
    StructuredLogger.log_check(name, status, int(duration_ms), {"witness": payload} if payload else None)
    return CheckResult(name=name, status=status, duration_ms=duration_ms, witness=payload)


def run_suite(config: Optional[SuiteConfig] = None) -> SuiteReport:
    """
    Run every registered check selected by the filter.

    Returns:
        SuiteReport sorted by check name; failures are entries, never raised

    Raises:
        NoChecksSelected: If a filter is given and selects nothing
    """
    config = config or SuiteConfig()
    names = selected_checks(config.filter)
    if not names:
        raise NoChecksSelected(config.filter)
    logger.info("Running suite", extra={"seed": config.seed, "checks": len(names), "mutant": config.mutant})
    if config.workers > 1:
        with ThreadPoolExecutor(max_workers=config.workers) as pool:
            results = list(pool.map(lambda name: _run_check(name, config), names))
    else:
        results = [_run_check(name, config) for name in names]
    return SuiteReport.from_checks(config.seed, results, config.filter)

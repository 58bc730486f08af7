"""
JINF Computable Permutations

This module implements bijections of ℕ with finite descriptions: beyond a
threshold N the map acts on each residue class r (mod p) as a shift
s(n) = n + (ρ(r) - r) + p·k_r, and a finite patch overrides arguments
n <= N. The class is closed under composition and inversion and pushes
eventually periodic sets forward exactly.

Descriptions are normalized (minimal modulus, then minimal threshold, patch
entries only where they differ from the class formula), so structural
equality of two permutations is equality of maps.

A pointwise QueryBackedPermutation wraps a callable oracle with a memo table
for permutations that are known only one point at a time.
"""

from __future__ import annotations

import random
import threading
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Dict, Iterable, List, Mapping, NamedTuple, Optional, Sequence, Tuple

from jinf.core.config import settings
from jinf.core.setalg import PeriodicSet, aligned_period, canonicalize
from jinf.utils.exceptions import (
    DomainError,
    GenerationFailed,
    InconsistentOracle,
    MalformedRepresentation,
    NotInjective,
    NotSurjective,
    ResidueMapNotBijective,
)
from jinf.utils.logger import StructuredLogger

logger = StructuredLogger.get_logger()


class ClassMap(NamedTuple):
    """Action on one residue class: target residue ρ(r) and offset k_r."""
    target: int
    offset: int


def _class_from_shift(modulus: int, residue: int, shift: int) -> ClassMap:
    target = (residue + shift) % modulus
    return ClassMap(target, (shift - (target - residue)) // modulus)


@dataclass(frozen=True)
class RawPermutation:
    """
    Unvalidated permutation description.

    Attributes:
        threshold: N, patch arguments must be <= N
        modulus: p
        classes: ClassMap (or (target, offset) pair) for each residue 0..p-1
        patch: Exceptional images for arguments n <= N
    """

    threshold: int
    modulus: int
    classes: Sequence[Tuple[int, int]]
    patch: Mapping[int, int] = field(default_factory=dict)


@dataclass(frozen=True)
class ComputablePermutation:
    """
    A validated, normalized eventually residue-affine bijection of ℕ.

    Build instances with validate() (or the constructors below); the fields
    are always in normal form.

    Attributes:
        threshold: Largest patched argument (0 when there is no patch)
        modulus: Minimal modulus p of the class regime
        classes: ClassMap per residue 0..p-1
        patch: Sorted (argument, image) pairs that differ from the formula
    """

    threshold: int
    modulus: int
    classes: Tuple[ClassMap, ...]
    patch: Tuple[Tuple[int, int], ...]

    @cached_property
    def shifts(self) -> Tuple[int, ...]:
        p = self.modulus
        return tuple(c.target - r + p * c.offset for r, c in enumerate(self.classes))

    @cached_property
    def max_shift(self) -> int:
        return max(abs(d) for d in self.shifts)

    @cached_property
    def _patch(self) -> Dict[int, int]:
        return dict(self.patch)

    @cached_property
    def _residue_preimage(self) -> Tuple[int, ...]:
        inverse = [0] * self.modulus
        for r, c in enumerate(self.classes):
            inverse[c.target] = r
        return tuple(inverse)

    @cached_property
    def _low_inverse(self) -> Dict[int, int]:
        return {self._formula(n) if n not in self._patch else self._patch[n]: n
                for n in range(1, self.threshold + 1)}

    @cached_property
    def inverse(self) -> "ComputablePermutation":
        return invert(self)

    def _formula(self, n: int) -> int:
        return n + self.shifts[n % self.modulus]

    def __call__(self, n: int) -> int:
        return apply(self, n)

    def is_identity(self) -> bool:
        return self.modulus == 1 and self.shifts == (0,) and not self.patch

    def to_spec(self) -> dict:
        """Structured description (the JSON object format of the CLI)."""
        return {
            "modulus": self.modulus,
            "threshold": self.threshold,
            "classes": [
                {"from": r, "to": c.target, "offset": c.offset}
                for r, c in enumerate(self.classes)
            ],
            "patch": {str(n): m for n, m in self.patch},
        }


def _normalize(
    threshold: int,
    modulus: int,
    shifts: Sequence[int],
    low: Mapping[int, int],
) -> ComputablePermutation:
    """
    Normal form of a map given by tail shifts (valid beyond `threshold`) and
    its exact values on 1..threshold.
    """
    for d in range(1, modulus + 1):
        if modulus % d == 0 and all(shifts[r] == shifts[r % d] for r in range(modulus)):
            modulus = d
            shifts = tuple(shifts[:d])
            break
    patch = tuple(
        (n, low[n]) for n in range(1, threshold + 1)
        if low[n] != n + shifts[n % modulus]
    )
    return ComputablePermutation(
        threshold=max((n for n, _ in patch), default=0),
        modulus=modulus,
        classes=tuple(_class_from_shift(modulus, r, d) for r, d in enumerate(shifts)),
        patch=patch,
    )


def validate(raw: RawPermutation) -> ComputablePermutation:
    """
    Validate a raw description and return its normal form.

    Beyond N the map is a union of shifted arithmetic progressions with
    pairwise distinct target residues, so collisions and gaps can only
    involve small values. With D the largest |shift| and M the largest of N
    and the patch images, injectivity is decided on [1, M + 2D + p] and
    surjectivity on [1, N + D].

    Args:
        raw: Unvalidated description

    Returns:
        Normalized ComputablePermutation

    Raises:
        MalformedRepresentation: Wrong class count, patch beyond N, image < 1
        ResidueMapNotBijective: ρ is not a permutation of residues
        NotInjective: Two arguments share an image (first collision)
        NotSurjective: A value has no preimage (smallest such value)
    """
    p = raw.modulus
    if p < 1:
        raise MalformedRepresentation("modulus must be positive", {"modulus": p})
    if raw.threshold < 0:
        raise MalformedRepresentation("threshold must be nonnegative", {"threshold": raw.threshold})
    if len(raw.classes) != p:
        raise MalformedRepresentation(
            "one class map per residue is required",
            {"modulus": p, "classes": len(raw.classes)},
        )
    classes = [ClassMap(int(t), int(k)) for t, k in raw.classes]
    targets = [c.target for c in classes]
    if sorted(targets) != list(range(p)):
        raise ResidueMapNotBijective(p, targets)
    patch = {int(n): int(m) for n, m in raw.patch.items()}
    for n, m in patch.items():
        if n < 1 or n > raw.threshold:
            raise MalformedRepresentation(
                "patch argument outside [1, threshold]", {"argument": n, "threshold": raw.threshold}
            )
        if m < 1:
            raise MalformedRepresentation("patch image below 1", {"argument": n, "image": m})

    shifts = [c.target - r + p * c.offset for r, c in enumerate(classes)]
    spread = max(abs(d) for d in shifts)
    ceiling = max([raw.threshold, *patch.values()])
    window = ceiling + 2 * spread + p

    def image(n: int) -> int:
        if n in patch:
            return patch[n]
        return n + shifts[n % p]

    seen: Dict[int, int] = {}
    for n in range(1, window + 1):
        m = image(n)
        if m < 1:
            raise MalformedRepresentation("class formula maps below 1", {"argument": n, "image": m})
        if m in seen:
            raise NotInjective(seen[m], n, m)
        seen[m] = n
    for m in range(1, raw.threshold + spread + 1):
        if m not in seen:
            raise NotSurjective(m)

    return _normalize(raw.threshold, p, shifts, {n: image(n) for n in range(1, raw.threshold + 1)})


def identity() -> ComputablePermutation:
    return validate(RawPermutation(0, 1, [(0, 0)]))


def transposition_patch(pairs: Iterable[Tuple[int, int]]) -> ComputablePermutation:
    """
    Finite-support permutation swapping each given pair.

    Raises:
        MalformedRepresentation: If the pairs overlap
    """
    patch: Dict[int, int] = {}
    for a, b in pairs:
        if a in patch or b in patch or a == b:
            raise MalformedRepresentation("transposition pairs must be disjoint", {"pair": [a, b]})
        patch[a], patch[b] = b, a
    return validate(RawPermutation(max(patch, default=0), 1, [(0, 0)], patch))


def from_shifts(modulus: int, shifts: Sequence[int], patch: Optional[Mapping[int, int]] = None) -> ComputablePermutation:
    """Validate a description given by per-residue shifts s(n) - n."""
    patch = dict(patch or {})
    return validate(RawPermutation(
        threshold=max(patch, default=0),
        modulus=modulus,
        classes=[_class_from_shift(modulus, r, d) for r, d in enumerate(shifts)],
        patch=patch,
    ))


def apply(s: ComputablePermutation, n: int) -> int:
    """
    s(n): patch first, class formula otherwise.

    Raises:
        DomainError: If n < 1
    """
    if n < 1:
        raise DomainError(n)
    if n in s._patch:
        return s._patch[n]
    return s._formula(n)


def apply_inverse(s: ComputablePermutation, m: int) -> int:
    """
    s⁻¹(m).

    Raises:
        DomainError: If m < 1
    """
    if m < 1:
        raise DomainError(m)
    if m in s._low_inverse:
        return s._low_inverse[m]
    r = s._residue_preimage[m % s.modulus]
    return m - s.shifts[r]


def compose(s: ComputablePermutation, t: ComputablePermutation) -> ComputablePermutation:
    """
    The permutation n ↦ s(t(n)).

    Raises:
        PeriodLimitExceeded: If lcm of the moduli exceeds the limit
    """
    modulus = aligned_period(s.modulus, t.modulus)
    threshold = max(t.threshold, s.threshold + t.max_shift)
    shifts = []
    for r in range(modulus):
        inner = t.shifts[r % t.modulus]
        shifts.append(inner + s.shifts[(r + inner) % s.modulus])
    low = {n: apply(s, apply(t, n)) for n in range(1, threshold + 1)}
    result = _normalize(threshold, modulus, shifts, low)
    return validate(RawPermutation(result.threshold, result.modulus, result.classes, dict(result.patch)))


def invert(s: ComputablePermutation) -> ComputablePermutation:
    """The inverse permutation."""
    low_images = [apply(s, n) for n in range(1, s.threshold + 1)]
    threshold = max([s.threshold + s.max_shift, *low_images])
    shifts = [0] * s.modulus
    for r, c in enumerate(s.classes):
        shifts[c.target] = -s.shifts[r]
    low = {m: apply_inverse(s, m) for m in range(1, threshold + 1)}
    result = _normalize(threshold, s.modulus, shifts, low)
    return validate(RawPermutation(result.threshold, result.modulus, result.classes, dict(result.patch)))


def pushforward(s: ComputablePermutation, subset: PeriodicSet) -> PeriodicSet:
    """
    The image set s(S), exactly: m ∈ s(S) iff s⁻¹(m) ∈ S.

    Raises:
        PeriodLimitExceeded: If lcm(p_s, p_S) exceeds the limit
    """
    u = s.inverse
    start = max(u.threshold, subset.prefix_len + u.max_shift)
    period = aligned_period(u.modulus, subset.period_len)
    bits = [subset.bit(apply(u, m)) for m in range(1, start + period + 1)]
    return canonicalize(bits[:start], bits[start:])


@dataclass(frozen=True)
class RandomPermutationConfig:
    """
    Bounds for random generation.

    Attributes:
        max_modulus: Largest modulus drawn
        max_offset: Largest |k_r| drawn
        max_patch: Largest support of the random finite permutation composed
            on the right (the patch that balances the tail is extra)
        seed: Seed of the generator
    """

    max_modulus: int = 6
    max_offset: int = 3
    max_patch: int = 8
    seed: int = 0


def random_permutation(
    config: RandomPermutationConfig,
    retries: Optional[int] = None,
) -> ComputablePermutation:
    """
    Draw a random valid permutation, deterministically for a fixed seed.

    A tail is drawn with offsets summing to zero (otherwise no finite patch
    can make it bijective), the arguments below the tail are matched to the
    values the tail misses, preferring the class formula, and a random
    finite permutation of support <= max_patch is composed on the right.

    Raises:
        MalformedRepresentation: If a bound is not positive
        GenerationFailed: If no valid permutation appears within the retries
    """
    if config.max_modulus < 1 or config.max_offset < 0 or config.max_patch < 0:
        raise MalformedRepresentation("random permutation bounds must be positive", {
            "max_modulus": config.max_modulus,
            "max_offset": config.max_offset,
            "max_patch": config.max_patch,
        })
    retries = settings.generation_retries if retries is None else retries
    rng = random.Random(config.seed)
    bound = config.max_offset

    for _ in range(retries):
        p = rng.randint(1, config.max_modulus)
        targets = list(range(p))
        rng.shuffle(targets)
        offsets = [rng.randint(-bound, bound) for _ in range(p)]
        while sum(offsets) != 0:
            i = rng.randrange(p)
            if sum(offsets) > 0 and offsets[i] > -bound:
                offsets[i] -= 1
            elif sum(offsets) < 0 and offsets[i] < bound:
                offsets[i] += 1
        shifts = [t - r + p * k for r, (t, k) in enumerate(zip(targets, offsets))]
        spread = max(abs(d) for d in shifts)
        low_end = spread

        tail_images = {n + shifts[n % p] for n in range(low_end + 1, low_end + 2 * spread + p + 1)}
        missing = [m for m in range(1, low_end + spread + 1) if m not in tail_images]
        if len(missing) != low_end:
            continue
        available = set(missing)
        low: Dict[int, int] = {}
        for n in range(1, low_end + 1):
            m = n + shifts[n % p]
            if m in available:
                low[n] = m
                available.discard(m)
        rest = sorted(available)
        for n in range(1, low_end + 1):
            if n not in low:
                low[n] = rest.pop(0)

        size = rng.randint(0, config.max_patch)
        support = rng.sample(range(1, low_end + spread + config.max_patch + 2), size) if size > 1 else []
        shuffled = support[:]
        rng.shuffle(shuffled)
        tau = dict(zip(support, shuffled))
        threshold = max([low_end, *support])

        def base(n: int) -> int:
            return low[n] if n <= low_end else n + shifts[n % p]

        patch = {n: base(tau.get(n, n)) for n in range(1, threshold + 1)}
        try:
            return validate(RawPermutation(
                threshold, p, [(t, k) for t, k in zip(targets, offsets)], patch
            ))
        except (NotInjective, NotSurjective, MalformedRepresentation):
            continue
    raise GenerationFailed(retries, config.seed)


class QueryBackedPermutation:
    """
    A permutation known pointwise through an oracle n ↦ s(n).

    Values are memoized and never change once computed; every new value is
    checked against the memo for injectivity. Calls are serialized by a
    lock, so concurrent callers see consistent values.

    Attributes:
        window: Largest argument the oracle answers for (None = unbounded)
    """

    def __init__(
        self,
        oracle: Callable[[int], int],
        inverse_oracle: Optional[Callable[[int], int]] = None,
        window: Optional[int] = None,
    ):
        self._oracle = oracle
        self._inverse_oracle = inverse_oracle
        self.window = window
        self._memo: Dict[int, int] = {}
        self._preimage: Dict[int, int] = {}
        self._lock = threading.RLock()

    def _record(self, n: int, m: int) -> None:
        other = self._preimage.get(m)
        if other is not None and other != n:
            raise InconsistentOracle(other, n, m)
        self._memo[n] = m
        self._preimage[m] = n

    def __call__(self, n: int) -> int:
        return self.apply(n)

    def apply(self, n: int) -> int:
        """
        s(n), from the memo or the oracle.

        Raises:
            DomainError: If n < 1 or n is beyond the window
            InconsistentOracle: If the new value collides with a memoized one
        """
        if n < 1:
            raise DomainError(n)
        if self.window is not None and n > self.window:
            raise DomainError(n, f"Argument {n} is beyond the window {self.window}")
        with self._lock:
            if n not in self._memo:
                self._record(n, self._oracle(n))
            return self._memo[n]

    def apply_inverse(self, m: int) -> int:
        """
        s⁻¹(m), from the inverse oracle or the memoized values.

        Raises:
            DomainError: If m is not known to be a value
        """
        if m < 1:
            raise DomainError(m)
        with self._lock:
            if m in self._preimage:
                return self._preimage[m]
            if self._inverse_oracle is None:
                raise DomainError(m, f"Value {m} is not among the memoized images")
            n = self._inverse_oracle(m)
            self._record(n, m)
            return n

    def probe(self, ns: Iterable[int]) -> List[int]:
        return [self.apply(n) for n in ns]

    def memoized(self) -> Dict[int, int]:
        with self._lock:
            return dict(sorted(self._memo.items()))

    def agrees_with(self, s: ComputablePermutation, ns: Iterable[int]) -> bool:
        return all(self.apply(n) == apply(s, n) for n in ns)

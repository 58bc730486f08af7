"""
JINF Periodic Set Algebra

This module implements exact algebra on eventually periodic subsets of
ℕ = {1, 2, 3, ...}: a set is a finite prefix of indicator bits followed by a
repeating period. Canonical forms (minimal period, then minimal prefix) make
structural equality coincide with extensional equality.

Element n belongs to S iff n <= L and prefix[n-1] is set, or n > L and
period[(n - L - 1) mod p] is set (L = len(prefix), p = len(period)).
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from math import lcm
from typing import Iterable, Iterator, Optional, Sequence, Tuple, Union

from jinf.core.config import settings
from jinf.utils.exceptions import (
    DomainError,
    MalformedRepresentation,
    NotInfinite,
    NotProperSubset,
    PeriodLimitExceeded,
)

Bits = Tuple[bool, ...]


def _minimal_period(period: Bits) -> Bits:
    p = len(period)
    for d in range(1, p + 1):
        if p % d == 0 and period == period[:d] * (p // d):
            return period[:d]
    return period


def canonicalize(prefix: Sequence[bool], period: Sequence[bool]) -> "PeriodicSet":
    """
    Build the canonical form of a raw (prefix, period) description.

    The period is shrunk to its primitive block first; the prefix is then
    shortened while its last bit agrees with the last period bit, rotating
    the period each time.

    Args:
        prefix: Indicator bits for 1..L
        period: Repeating indicator bits after L

    Returns:
        Canonical PeriodicSet with the same members

    Raises:
        MalformedRepresentation: If the period is empty
    """
    prefix_bits = tuple(bool(b) for b in prefix)
    period_bits = tuple(bool(b) for b in period)
    if not period_bits:
        raise MalformedRepresentation("period length must be at least 1")

    period_bits = _minimal_period(period_bits)
    while prefix_bits and prefix_bits[-1] == period_bits[-1]:
        period_bits = (prefix_bits[-1],) + period_bits[:-1]
        prefix_bits = prefix_bits[:-1]
    return PeriodicSet(prefix_bits, period_bits, _canonical=True)


def from_raw(
    prefix_len: int,
    prefix_bits: Union[str, Sequence[int]],
    period_len: int,
    period_bits: Union[str, Sequence[int]],
) -> "PeriodicSet":
    """
    Canonicalize a description given with explicit lengths.

    Args:
        prefix_len: Declared prefix length L
        prefix_bits: L bits (string over {0,1} or integer sequence)
        period_len: Declared period length p
        period_bits: p bits

    Returns:
        Canonical PeriodicSet

    Raises:
        MalformedRepresentation: If p = 0 or a bit length does not match
    """
    prefix = _parse_bits(prefix_bits)
    period = _parse_bits(period_bits)
    if period_len < 1:
        raise MalformedRepresentation("period length must be at least 1", {"period_len": period_len})
    if prefix_len < 0 or len(prefix) != prefix_len:
        raise MalformedRepresentation(
            "prefix bits do not match the declared length",
            {"prefix_len": prefix_len, "bits": len(prefix)},
        )
    if len(period) != period_len:
        raise MalformedRepresentation(
            "period bits do not match the declared length",
            {"period_len": period_len, "bits": len(period)},
        )
    return canonicalize(prefix, period)


def _parse_bits(bits: Union[str, Sequence[int]]) -> Bits:
    if isinstance(bits, str):
        if any(c not in "01" for c in bits):
            raise MalformedRepresentation("bits must be 0 or 1", {"bits": bits})
        return tuple(c == "1" for c in bits)
    values = tuple(bits)
    if any(v not in (0, 1, True, False) for v in values):
        raise MalformedRepresentation("bits must be 0 or 1", {"bits": list(values)})
    return tuple(bool(v) for v in values)


@dataclass(frozen=True)
class PeriodicSet:
    """
    An eventually periodic subset of ℕ, always held in canonical form.

    Instances are immutable and hashable; equality is structural and, since
    the form is canonical, extensional. Use the module constructors
    (canonicalize, from_elements, residue_class, ...) rather than calling the
    class directly.

    Attributes:
        prefix: Indicator bits for 1..L
        period: Repeating indicator bits after L
    """

    prefix: Bits
    period: Bits
    _canonical: bool = False

    def __post_init__(self) -> None:
        if not self._canonical:
            canon = canonicalize(self.prefix, self.period)
            object.__setattr__(self, "prefix", canon.prefix)
            object.__setattr__(self, "period", canon.period)
            object.__setattr__(self, "_canonical", True)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PeriodicSet):
            return NotImplemented
        return self.prefix == other.prefix and self.period == other.period

    def __hash__(self) -> int:
        return hash((self.prefix, self.period))

    @property
    def prefix_len(self) -> int:
        return len(self.prefix)

    @property
    def period_len(self) -> int:
        return len(self.period)

    def bit(self, n: int) -> bool:
        """Membership without the domain check (n >= 1 assumed)."""
        if n <= len(self.prefix):
            return self.prefix[n - 1]
        return self.period[(n - len(self.prefix) - 1) % len(self.period)]

    def __contains__(self, n: object) -> bool:
        return isinstance(n, int) and n >= 1 and self.bit(n)

    def is_finite(self) -> bool:
        return not any(self.period)

    def is_cofinite(self) -> bool:
        return all(self.period)

    def is_balanced(self) -> bool:
        return any(self.period) and not all(self.period)

    def is_empty(self) -> bool:
        return self.is_finite() and not any(self.prefix)

    def is_full(self) -> bool:
        return self.is_cofinite() and all(self.prefix)

    def elements(self, limit: Optional[int] = None) -> Iterator[int]:
        """
        Iterate members in ascending order.

        Args:
            limit: Stop after members <= limit; unbounded when None (only
                safe to exhaust for finite sets)

        Yields:
            Members of the set
        """
        n = 1
        horizon = len(self.prefix) if self.is_finite() else None
        while True:
            if limit is not None and n > limit:
                return
            if horizon is not None and n > horizon:
                return
            if self.bit(n):
                yield n
            n += 1

    def first(self, count: int) -> list:
        """Return the `count` smallest members (fewer if the set is finite)."""
        out = []
        for n in self.elements():
            if len(out) >= count:
                break
            out.append(n)
        return out

    def min(self) -> int:
        """Smallest member; raises NotProperSubset for the empty set."""
        for n in self.elements():
            return n
        raise NotProperSubset("empty")

    def is_subset(self, other: "PeriodicSet") -> bool:
        return set_op(SetOpKind.DIFF, self, other).is_empty()

    def render(self) -> str:
        """Canonical text in the set expression language."""
        from jinf.cli.expressions import render_set

        return render_set(self)

    def __repr__(self) -> str:
        return f"PeriodicSet({self.render()})"

    # Operator sugar, in the style of the set types of the standard library
    def __or__(self, other: "PeriodicSet") -> "PeriodicSet":
        return set_op(SetOpKind.UNION, self, other)

    def __and__(self, other: "PeriodicSet") -> "PeriodicSet":
        return set_op(SetOpKind.INTER, self, other)

    def __sub__(self, other: "PeriodicSet") -> "PeriodicSet":
        return set_op(SetOpKind.DIFF, self, other)

    def __xor__(self, other: "PeriodicSet") -> "PeriodicSet":
        return set_op(SetOpKind.SYMDIFF, self, other)

    def __invert__(self) -> "PeriodicSet":
        return set_op(SetOpKind.COMPLEMENT, self)

    def __le__(self, other: "PeriodicSet") -> bool:
        return self.is_subset(other)

    def __lt__(self, other: "PeriodicSet") -> bool:
        return self != other and self.is_subset(other)


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------

def from_elements(elements: Iterable[int]) -> PeriodicSet:
    """
    Encode a finite set literal (prefix only, all-zero period of length 1).

    Raises:
        DomainError: If an element is < 1
    """
    members = set(elements)
    for n in members:
        if n < 1:
            raise DomainError(n)
    top = max(members, default=0)
    return canonicalize([n in members for n in range(1, top + 1)], (False,))


def residue_class(modulus: int, residue: int) -> PeriodicSet:
    """The set {n : n ≡ residue (mod modulus)}."""
    if modulus < 1:
        raise MalformedRepresentation("modulus must be positive", {"modulus": modulus})
    r = residue % modulus
    return canonicalize((), [(i + 1) % modulus == r for i in range(modulus)])


def greater_than(n: int) -> PeriodicSet:
    """The cofinite set {m : m > n}."""
    return canonicalize([False] * max(n, 0), (True,))


EMPTY = canonicalize((), (False,))
NATURALS = canonicalize((), (True,))
EVENS = residue_class(2, 0)
ODDS = residue_class(2, 1)


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------

def member(s: PeriodicSet, n: int) -> bool:
    """
    Decide n ∈ S.

    Raises:
        DomainError: If n < 1
    """
    if n < 1:
        raise DomainError(n)
    return s.bit(n)


class SetOpKind(str, enum.Enum):
    """Boolean operations on periodic sets."""
    UNION = "union"
    INTER = "inter"
    DIFF = "diff"
    SYMDIFF = "symdiff"
    COMPLEMENT = "complement"


_COMBINE = {
    SetOpKind.UNION: lambda a, b: a or b,
    SetOpKind.INTER: lambda a, b: a and b,
    SetOpKind.DIFF: lambda a, b: a and not b,
    SetOpKind.SYMDIFF: lambda a, b: a != b,
}


def aligned_period(*periods: int, limit: Optional[int] = None) -> int:
    """
    Least common multiple of periods, guarded by the period limit.

    Raises:
        PeriodLimitExceeded: If the lcm exceeds the limit
    """
    limit = settings.period_limit if limit is None else limit
    p = lcm(*periods)
    if p > limit:
        raise PeriodLimitExceeded(p, limit)
    return p


def set_op(
    kind: Union[SetOpKind, str],
    a: PeriodicSet,
    b: Optional[PeriodicSet] = None,
    limit: Optional[int] = None,
) -> PeriodicSet:
    """
    Apply a boolean operation, aligning on max prefix and lcm of periods.

    Args:
        kind: union, inter, diff, symdiff or complement
        a: First operand
        b: Second operand (omitted for complement)
        limit: Period limit override

    Returns:
        Canonical result

    Raises:
        MalformedRepresentation: If the second operand is missing or extra
        PeriodLimitExceeded: If the aligned period is too large
    """
    kind = SetOpKind(kind)
    if kind is SetOpKind.COMPLEMENT:
        if b is not None:
            raise MalformedRepresentation("complement takes one operand")
        return PeriodicSet(
            tuple(not x for x in a.prefix), tuple(not x for x in a.period), _canonical=True
        )
    if b is None:
        raise MalformedRepresentation(f"{kind.value} takes two operands")

    prefix_len = max(a.prefix_len, b.prefix_len)
    period_len = aligned_period(a.period_len, b.period_len, limit=limit)
    combine = _COMBINE[kind]
    bits = [combine(a.bit(n), b.bit(n)) for n in range(1, prefix_len + period_len + 1)]
    return canonicalize(bits[:prefix_len], bits[prefix_len:])


def union_all(sets: Iterable[PeriodicSet]) -> PeriodicSet:
    result = EMPTY
    for s in sets:
        result = result | s
    return result


def inter_all(sets: Iterable[PeriodicSet]) -> PeriodicSet:
    result = NATURALS
    for s in sets:
        result = result & s
    return result


@dataclass(frozen=True)
class Finite:
    """A finite set, listed exactly."""
    elements: Tuple[int, ...]

    @property
    def cardinality(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class Infinite:
    """An infinite set."""


INFINITE = Infinite()


def finiteness(s: PeriodicSet) -> Union[Finite, Infinite]:
    """
    Decide finiteness; finite sets are listed in ascending order.
    """
    if not s.is_finite():
        return INFINITE
    return Finite(tuple(n for n, bit in enumerate(s.prefix, start=1) if bit))


def cardinality(s: PeriodicSet) -> Optional[int]:
    """|S|, or None when S is infinite."""
    result = finiteness(s)
    return result.cardinality if isinstance(result, Finite) else None


class OrbitKind(str, enum.Enum):
    """Orbits of the permutation group of ℕ on proper nonempty subsets."""
    FINITE = "finite"
    COFINITE = "cofinite"
    BALANCED = "balanced"


@dataclass(frozen=True)
class OrbitType:
    """
    Orbit tag: FiniteOfSize(k), CofiniteOfCodim(k) or Balanced.

    Attributes:
        kind: Orbit kind
        size: k for the finite and cofinite kinds, None when balanced
    """

    kind: OrbitKind
    size: Optional[int] = None

    @classmethod
    def finite_of_size(cls, k: int) -> "OrbitType":
        return cls(OrbitKind.FINITE, k)

    @classmethod
    def cofinite_of_codim(cls, k: int) -> "OrbitType":
        return cls(OrbitKind.COFINITE, k)

    @classmethod
    def balanced(cls) -> "OrbitType":
        return cls(OrbitKind.BALANCED)

    def __str__(self) -> str:
        if self.kind is OrbitKind.FINITE:
            return f"FiniteOfSize({self.size})"
        if self.kind is OrbitKind.COFINITE:
            return f"CofiniteOfCodim({self.size})"
        return "Balanced"


def classify_orbit(s: PeriodicSet) -> OrbitType:
    """
    Classify a proper nonempty subset into its orbit.

    Raises:
        NotProperSubset: If S is empty or all of ℕ
    """
    if s.is_empty():
        raise NotProperSubset("empty")
    if s.is_full():
        raise NotProperSubset("naturals")
    if s.is_finite():
        return OrbitType.finite_of_size(sum(s.prefix))
    if s.is_cofinite():
        return OrbitType.cofinite_of_codim(len(s.prefix) - sum(s.prefix))
    return OrbitType.balanced()


def split_infinite(s: PeriodicSet) -> Tuple[PeriodicSet, PeriodicSet]:
    """
    Split an infinite set into two disjoint infinite halves.

    Members in ascending order go alternately to the first half (1st, 3rd,
    ...) and the second half (2nd, 4th, ...). The alternation repeats after
    two periods, so each half has period at most 2p.

    Raises:
        NotInfinite: If S is finite
    """
    if s.is_finite():
        raise NotInfinite(s)
    horizon = s.prefix_len + 2 * s.period_len
    first, second = [], []
    parity = 0
    for n in range(1, horizon + 1):
        if s.bit(n):
            first.append(parity == 0)
            second.append(parity == 1)
            parity ^= 1
        else:
            first.append(False)
            second.append(False)
    cut = s.prefix_len
    return (
        canonicalize(first[:cut], first[cut:]),
        canonicalize(second[:cut], second[cut:]),
    )


def random_periodic_set(
    rng: random.Random,
    max_prefix: int = 6,
    max_period: int = 6,
) -> PeriodicSet:
    """Draw a random periodic set (any orbit, possibly empty or full)."""
    prefix = [rng.random() < 0.5 for _ in range(rng.randint(0, max_prefix))]
    period = [rng.random() < 0.5 for _ in range(rng.randint(1, max_period))]
    return canonicalize(prefix, period)


def random_balanced_set(
    rng: random.Random,
    max_prefix: int = 6,
    max_period: int = 6,
) -> PeriodicSet:
    """Draw a random balanced set (period with both a zero and a one)."""
    prefix = [rng.random() < 0.5 for _ in range(rng.randint(0, max_prefix))]
    size = rng.randint(2, max(max_period, 2))
    period = [rng.random() < 0.5 for _ in range(size)]
    one, zero = rng.sample(range(size), 2)
    period[one] = True
    period[zero] = False
    return canonicalize(prefix, period)

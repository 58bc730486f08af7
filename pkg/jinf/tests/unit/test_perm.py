"""Tests for computable permutations."""

import pytest
from hypothesis import given

from jinf.core import perm as permutations
from jinf.core.perm import (
    QueryBackedPermutation,
    RandomPermutationConfig,
    RawPermutation,
    apply_inverse,
    compose,
    identity,
    invert,
    pushforward,
    random_permutation,
    transposition_patch,
    validate,
)
from jinf.core.setalg import EVENS, ODDS, from_elements, residue_class
from jinf.tests.strategies import computable_permutations, periodic_sets
from jinf.utils.exceptions import (
    DomainError,
    InconsistentOracle,
    MalformedRepresentation,
    NotInjective,
    NotSurjective,
    ResidueMapNotBijective,
)


class TestValidate:
    def test_identity(self):
        s = identity()
        assert s.is_identity()
        assert [s(n) for n in range(1, 6)] == [1, 2, 3, 4, 5]

    def test_transposition(self, transposition):
        assert [transposition(n) for n in range(1, 5)] == [2, 1, 3, 4]
        assert transposition.threshold == 2
        assert transposition.to_spec() == {
            "modulus": 1,
            "threshold": 2,
            "classes": [{"from": 0, "to": 0, "offset": 0}],
            "patch": {"1": 2, "2": 1},
        }

    def test_pair_swap(self, pair_swap):
        assert [pair_swap(n) for n in range(1, 7)] == [2, 1, 4, 3, 6, 5]
        assert pair_swap.modulus == 2
        assert pair_swap.threshold == 0

    def test_residue_map_must_be_bijective(self):
        with pytest.raises(ResidueMapNotBijective):
            validate(RawPermutation(0, 2, [(0, 0), (0, 0)]))

    def test_shift_is_not_surjective(self):
        with pytest.raises(NotSurjective) as info:
            validate(RawPermutation(0, 1, [(0, 1)]))
        assert info.value.details["value"] == 1

    def test_patch_collision(self):
        with pytest.raises(NotInjective):
            validate(RawPermutation(1, 1, [(0, 0)], {1: 2}))

    def test_patch_beyond_threshold(self):
        with pytest.raises(MalformedRepresentation):
            validate(RawPermutation(1, 1, [(0, 0)], {3: 3}))

    def test_formula_below_one(self):
        with pytest.raises(MalformedRepresentation):
            validate(RawPermutation(0, 1, [(0, -1)]))

    def test_wrong_class_count(self):
        with pytest.raises(MalformedRepresentation):
            validate(RawPermutation(0, 3, [(0, 0), (1, 0)]))

    def test_normal_form(self):
        raw = RawPermutation(4, 2, [(0, 0), (1, 0)], {1: 1, 2: 2})
        assert validate(raw) == identity()

    def test_overlapping_transpositions(self):
        with pytest.raises(MalformedRepresentation):
            transposition_patch([(1, 2), (2, 3)])

    def test_random_permutations_are_bijective(self):
        for seed in range(100):
            s = random_permutation(RandomPermutationConfig(seed=seed))
            images = [s(n) for n in range(1, 257)]
            assert len(set(images)) == 256
            assert all(apply_inverse(s, m) == n for n, m in enumerate(images, start=1))

    def test_random_permutation_is_deterministic(self):
        config = RandomPermutationConfig(seed=7)
        assert random_permutation(config) == random_permutation(config)

    def test_random_permutation_bounds(self):
        with pytest.raises(MalformedRepresentation):
            random_permutation(RandomPermutationConfig(max_modulus=0))


class TestAlgebra:
    def test_domain(self, pair_swap):
        with pytest.raises(DomainError):
            pair_swap(0)
        with pytest.raises(DomainError):
            apply_inverse(pair_swap, -1)

    def test_pair_swap_is_an_involution(self, pair_swap):
        assert compose(pair_swap, pair_swap) == identity()
        assert invert(pair_swap) == pair_swap

    def test_transposition_inverse(self, transposition):
        assert invert(transposition) == transposition

    def test_compose_order(self, pair_swap, transposition):
        st = compose(pair_swap, transposition)
        assert [st(n) for n in range(1, 5)] == [1, 2, 4, 3]

    def test_pushforward(self, pair_swap, transposition):
        assert pushforward(pair_swap, EVENS) == ODDS
        moved = (EVENS - from_elements([2])) | from_elements([1])
        assert pushforward(transposition, EVENS) == moved
        assert pushforward(identity(), residue_class(3, 1)) == residue_class(3, 1)

    @given(computable_permutations(), computable_permutations())
    def test_compose_and_invert_pointwise(self, s, t):
        st, inverse = compose(s, t), invert(s)
        for n in range(1, 129):
            assert st(n) == s(t(n))
            assert inverse(s(n)) == n

    @given(computable_permutations(), periodic_sets())
    def test_pushforward_is_exact(self, s, subset):
        image = pushforward(s, subset)
        for n in range(1, 129):
            assert (s(n) in image) == (n in subset)

    @given(computable_permutations())
    def test_spec_describes_the_same_map(self, s):
        spec = s.to_spec()
        raw = RawPermutation(
            spec["threshold"],
            spec["modulus"],
            [(c["to"], c["offset"]) for c in spec["classes"]],
            {int(n): m for n, m in spec["patch"].items()},
        )
        assert validate(raw) == s


class TestQueryBackedPermutation:
    def test_memoizes(self):
        calls = []

        def oracle(n):
            calls.append(n)
            return n + 1 if n % 2 else n - 1

        q = QueryBackedPermutation(oracle)
        assert q.probe([1, 2, 1]) == [2, 1, 2]
        assert calls == [1, 2]
        assert q.memoized() == {1: 2, 2: 1}
        assert q.apply_inverse(2) == 1

    def test_inconsistent_oracle(self):
        q = QueryBackedPermutation(lambda n: 1)
        q(1)
        with pytest.raises(InconsistentOracle):
            q(2)

    def test_window(self):
        q = QueryBackedPermutation(lambda n: n, window=3)
        assert q(3) == 3
        with pytest.raises(DomainError):
            q(4)

    def test_unknown_inverse(self):
        q = QueryBackedPermutation(lambda n: n)
        with pytest.raises(DomainError):
            q.apply_inverse(5)
        assert QueryBackedPermutation(lambda n: n, inverse_oracle=lambda m: m).apply_inverse(5) == 5

    def test_agrees_with(self, pair_swap):
        q = QueryBackedPermutation(pair_swap)
        assert q.agrees_with(pair_swap, range(1, 50))
        assert not q.agrees_with(permutations.identity(), range(1, 50))

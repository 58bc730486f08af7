"""Hypothesis strategies for periodic sets, vertices and permutations."""

from hypothesis import strategies as st

from jinf.core.perm import RandomPermutationConfig, random_permutation
from jinf.core.setalg import canonicalize
from jinf.graph.johnson import Vertex


@st.composite
def periodic_sets(draw, max_prefix: int = 6, max_period: int = 6):
    prefix = draw(st.lists(st.booleans(), max_size=max_prefix))
    period = draw(st.lists(st.booleans(), min_size=1, max_size=max_period))
    return canonicalize(prefix, period)


@st.composite
def balanced_sets(draw, max_prefix: int = 6, max_period: int = 6):
    prefix = draw(st.lists(st.booleans(), max_size=max_prefix))
    period = draw(
        st.lists(st.booleans(), min_size=2, max_size=max_period).filter(
            lambda bits: any(bits) and not all(bits)
        )
    )
    return canonicalize(prefix, period)


def vertices(max_prefix: int = 6, max_period: int = 6):
    return balanced_sets(max_prefix, max_period).map(Vertex)


@st.composite
def computable_permutations(draw, max_modulus: int = 4, max_offset: int = 2, max_patch: int = 4):
    seed = draw(st.integers(min_value=0, max_value=2 ** 32 - 1))
    return random_permutation(RandomPermutationConfig(
        max_modulus=max_modulus, max_offset=max_offset, max_patch=max_patch, seed=seed,
    ))

"""
Shared fixtures: named sets, vertices and permutations.

Hypothesis profiles: "default" keeps runs short; set
HYPOTHESIS_PROFILE=thorough for more examples.
"""

import os
import random

import pytest
from hypothesis import HealthCheck, settings

from jinf.core import perm as permutations
from jinf.core.setalg import EVENS, ODDS, from_elements, residue_class
from jinf.graph.johnson import Vertex
from jinf.utils.logger import StructuredLogger

settings.register_profile(
    "default",
    max_examples=50,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile("thorough", max_examples=500, deadline=None)
settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture
def evens():
    return EVENS


@pytest.fixture
def odds():
    return ODDS


@pytest.fixture
def mult3():
    return residue_class(3, 0)


@pytest.fixture
def evens_vertex():
    return Vertex(EVENS)


@pytest.fixture
def moved_evens():
    """(Evens ∖ {2}) ∪ {1}, adjacent to Evens."""
    return Vertex((EVENS - from_elements([2])) | from_elements([1]))


@pytest.fixture
def pair_swap():
    """2k - 1 ↔ 2k for every k."""
    return permutations.from_shifts(2, [-1, 1])


@pytest.fixture
def transposition():
    """The transposition (1 2)."""
    return permutations.transposition_patch([(1, 2)])


@pytest.fixture
def rng():
    return random.Random(1234)


@pytest.fixture
def events(monkeypatch):
    """(action, details) pairs passed to StructuredLogger.log_event."""
    recorded = []

    def record(cls, action, details):
        recorded.append((action, details))

    monkeypatch.setattr(StructuredLogger, "log_event", classmethod(record))
    return recorded

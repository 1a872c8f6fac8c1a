"""Shared fixtures: small named graphs used across the suites."""
import os
import sys

# Make the top-level packages importable when pytest runs from anywhere
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import pytest

from core.graph import EdgeColoredGraph
from projective.incidence import rainbow_incidence_graph
from projective.plane import build_plane
from utils.generators import proper_complete_graph


def complete(n, color_of):
    return EdgeColoredGraph(n, ((u, v, color_of(i, u, v)) for i, (u, v) in enumerate(
        (u, v) for u in range(n) for v in range(u + 1, n))))


@pytest.fixture
def rainbow_k4():
    return complete(4, lambda i, u, v: i)


@pytest.fixture
def rainbow_k5():
    return complete(5, lambda i, u, v: i)


@pytest.fixture
def mono_k3():
    return complete(3, lambda i, u, v: 0)


@pytest.fixture
def mono_k4():
    return complete(4, lambda i, u, v: 0)


@pytest.fixture
def proper_k4():
    # The three perfect matchings {01, 23}, {02, 13}, {03, 12}
    return EdgeColoredGraph(4, [(0, 1, 0), (2, 3, 0), (0, 2, 1), (1, 3, 1), (0, 3, 2), (1, 2, 2)])


@pytest.fixture
def proper_k6():
    return proper_complete_graph(6)


@pytest.fixture(scope="session")
def proper_k60():
    return proper_complete_graph(60)


@pytest.fixture(scope="session")
def fano_rainbow():
    return rainbow_incidence_graph(build_plane(2))

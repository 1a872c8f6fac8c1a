"""Brute-force enumeration of rainbow 3- and 4-cycles, used as ground truth."""
from itertools import combinations
from typing import List

from core.errors import InputError
from core.graph import EdgeColoredGraph
from rainbow.detector import RainbowWitness, make_witness


def _orderings(vertex_set):
    if len(vertex_set) == 3:
        return [vertex_set]
    a, b, c, d = vertex_set
    # The three distinct 4-cycles on {a<b<c<d}, already in canonical form
    return [(a, b, c, d), (a, b, d, c), (a, c, b, d)]


def oracle_rainbow_ck(graph: EdgeColoredGraph, k: int) -> List[RainbowWitness]:
    """
    Enumerate every rainbow k-cycle for k in {3, 4}.

    Every k-subset and each of its distinct cyclic orderings is tested, so each
    cycle appears once up to rotation and reflection. Results are sorted by
    canonical vertex tuple.

    Raises:
        InputError: When k is not 3 or 4.
    """
    if k not in (3, 4):
        raise InputError(f"oracle supports k in {{3, 4}}, got {k}")
    found = []
    for vertex_set in combinations(graph.vertices(), k):
        for order in _orderings(vertex_set):
            pairs = [(order[i], order[(i + 1) % k]) for i in range(k)]
            if not all(graph.has_edge(u, v) for u, v in pairs):
                continue
            if len({graph.color(u, v) for u, v in pairs}) == k:
                found.append(make_witness(graph, order))
    return sorted(found, key=lambda w: w.vertices)

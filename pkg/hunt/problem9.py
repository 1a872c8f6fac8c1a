"""
Search for an edge-colored graph with no spanning bipartite subgraph H
satisfying d^c_H(v) >= d^c_G(v) / 2 at every vertex.
"""
from typing import Dict, List, Optional

from bipartize.erdos import erdos_bipartize
from bipartize.lemma7 import lemma7_bipartize
from bipartize.partition import Bipartition, cross_color_degree
from config.config import PROBLEM9_MAX_ORDER, PROBLEM9_ORDER_RANGE
from core.colors import color_degree
from core.ecg_format import parse, serialize
from core.errors import InputError
from core.graph import EdgeColoredGraph
from hunt.base_hunt import BaseHunt
from utils.generators import uniform_graph


def verify_problem9_bound(graph: EdgeColoredGraph, part: Bipartition) -> Optional[int]:
    """Return the least v with 2 d^c_H(v) < d^c_G(v), or None."""
    part.check_for(graph)
    for v in graph.vertices():
        if 2 * cross_color_degree(graph, part, v) < color_degree(graph, v):
            return v
    return None


def _color_masks(graph: EdgeColoredGraph) -> List[Dict[int, int]]:
    """For each vertex, color -> bitmask of the neighbors reached by that color."""
    masks = [dict() for _ in graph.vertices()]
    for u, v, c in graph.colored_edges():
        masks[u][c] = masks[u].get(c, 0) | (1 << v)
        masks[v][c] = masks[v].get(c, 0) | (1 << u)
    return masks


def _left_mask(part: Bipartition) -> int:
    return sum(1 << v for v in part.left)


def problem9_exhaustive(graph: EdgeColoredGraph, heuristics: bool = True) -> Optional[Bipartition]:
    """
    Return a bipartition meeting 2 d^c_H(v) >= d^c_G(v) for all v, or None
    when none of the 2^(n-1) splits does.

    With `heuristics`, the max-cut and Lemma 7 local-search outputs are tried
    before the enumeration. Vertex n-1 stays on the right during enumeration,
    which covers every split up to swapping the parts.

    Raises:
        InputError: When n exceeds the enumeration bound.
    """
    n = graph.n
    if n > PROBLEM9_MAX_ORDER:
        raise InputError(
            f"exhaustive search supports n <= {PROBLEM9_MAX_ORDER}, got n={n}; "
            "use the sampling hunt (problem9_hunt) instead"
        )
    masks = _color_masks(graph)
    targets = [len(m) for m in masks]
    full = (1 << n) - 1

    def meets_bound(left):
        right = full & ~left
        for v in range(n):
            other = right if (left >> v) & 1 else left
            hit = sum(1 for mask in masks[v].values() if mask & other)
            if 2 * hit < targets[v]:
                return False
        return True

    tried = []
    if heuristics:
        tried.append(_left_mask(erdos_bipartize(graph)))
        tried.append(_left_mask(lemma7_bipartize(graph)[0]))
    for left in tried:
        if meets_bound(left):
            return Bipartition.from_left(graph, (v for v in range(n) if (left >> v) & 1))

    for left in range(1 << (n - 1)):
        if meets_bound(left):
            return Bipartition.from_left(graph, (v for v in range(n) if (left >> v) & 1))
    return None


class Problem9Hunt(BaseHunt):
    """Samples G(n, p) graphs with uniform colorings and enumerates their splits."""

    def __init__(self, order_range=PROBLEM9_ORDER_RANGE):
        low, high = order_range
        if not (1 <= low <= high <= PROBLEM9_MAX_ORDER):
            raise InputError(f"order range must lie in 1..{PROBLEM9_MAX_ORDER}, got {order_range}")
        super().__init__("problem9", {"order_range": (low, high), "model": "uniform"})
        self.order_range = (low, high)

    def draw(self, rng):
        n = rng.randint(*self.order_range)
        return uniform_graph(n, rng)

    def label(self, graph):
        return f"n{graph.n:02d}"

    def order(self, graph):
        return graph.n

    def is_candidate(self, graph):
        return problem9_exhaustive(graph) is None

    def serialize(self, graph):
        return serialize(graph)

    def recheck(self, text):
        return problem9_exhaustive(parse(text), heuristics=False) is None


def problem9_hunt(order_range=PROBLEM9_ORDER_RANGE, budget=1000, seed=0, use_concurrent=False, workers=1):
    """Run the Problem 9 hunt and return its HuntReport."""
    return Problem9Hunt(order_range).run(budget, seed, use_concurrent, workers)

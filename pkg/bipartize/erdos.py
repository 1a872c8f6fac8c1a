"""Max-cut local search giving d_H(v) >= d_G(v) / 2 at every vertex."""
import random
from typing import Optional

from bipartize.partition import Bipartition, cross_degree, initial_split
from core.graph import EdgeColoredGraph


def erdos_bipartize(
    graph: EdgeColoredGraph,
    rng: Optional[random.Random] = None,
    initial: Optional[Bipartition] = None,
) -> Bipartition:
    """
    Move the least vertex with more same-side than cross-side neighbors until
    none is left. Each move raises the cut size by at least one, so the loop
    ends after at most |E(G)| moves.
    """
    part = initial if initial is not None else initial_split(graph, rng)
    part.check_for(graph)
    left = set(part.left)

    def same_minus_cross(v):
        on_left = v in left
        same = sum(1 for u in graph.neighbors(v) if (u in left) == on_left)
        return same - (graph.degree(v) - same)

    while True:
        mover = next((v for v in graph.vertices() if same_minus_cross(v) > 0), None)
        if mover is None:
            break
        if mover in left:
            left.discard(mover)
        else:
            left.add(mover)
    return Bipartition.from_left(graph, left)


def verify_erdos_guarantee(graph: EdgeColoredGraph, part: Bipartition) -> Optional[int]:
    """Return the least vertex with 2 d_H(v) < d_G(v), or None."""
    part.check_for(graph)
    for v in graph.vertices():
        if 2 * cross_degree(graph, part, v) < graph.degree(v):
            return v
    return None

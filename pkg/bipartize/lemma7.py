"""
Potential-function local search for a spanning bipartite subgraph H with

    2 d^c_H(v) + 3 d_H(v) >= d^c_G(v) + d_G(v)   for every vertex v.

Moving a violating vertex w across the cut changes |E(H)| by d_G(w) - 2 d_H(w)
and the color-degree sum by at least d^c_G(w) - 2 d^c_H(w) - d_H(w), so the
potential f(H) = |E(H)| + sum d^c_H(v) rises by at least
d_G(w) + d^c_G(w) - 2 d^c_H(w) - 3 d_H(w) > 0. Since f <= 3|E(G)|, the search
stops after at most 3|E(G)| moves.
"""
import random
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from bipartize.partition import (
    Bipartition,
    cross_color_degree,
    cross_degree,
    initial_split,
)
from core.colors import color_degree
from core.graph import EdgeColoredGraph


@dataclass(frozen=True)
class Move:
    vertex: int
    potential_before: int
    potential_after: int


@dataclass
class SearchTrace:
    """Moves of one local search, in order, and the potential it ended at."""

    moves: List[Move] = field(default_factory=list)
    final_potential: int = 0

    def export(self) -> str:
        """One `move <v> <f_before> <f_after>` line per move."""
        return "".join(f"move {m.vertex} {m.potential_before} {m.potential_after}\n" for m in self.moves)

    def is_strictly_increasing(self) -> bool:
        return all(m.potential_after > m.potential_before for m in self.moves)

    def to_dict(self):
        return {
            "moves": [[m.vertex, m.potential_before, m.potential_after] for m in self.moves],
            "final_potential": self.final_potential,
        }


def lemma7_slack(graph: EdgeColoredGraph, part: Bipartition, v: int) -> int:
    """2 d^c_H(v) + 3 d_H(v) - d^c_G(v) - d_G(v); negative means v violates."""
    return (
        2 * cross_color_degree(graph, part, v)
        + 3 * cross_degree(graph, part, v)
        - color_degree(graph, v)
        - graph.degree(v)
    )


def verify_lemma7_guarantee(graph: EdgeColoredGraph, part: Bipartition) -> Optional[int]:
    """Return the least vertex violating the inequality, or None when all hold."""
    part.check_for(graph)
    for v in graph.vertices():
        if lemma7_slack(graph, part, v) < 0:
            return v
    return None


class _CutState:
    """Per-vertex d_H and d^c_H for the current split, refreshed around each move."""

    def __init__(self, graph: EdgeColoredGraph, part: Bipartition):
        self.graph = graph
        self.left = set(part.left)
        self.target = [color_degree(graph, v) + graph.degree(v) for v in graph.vertices()]
        self.d_h = [0] * graph.n
        self.dc_h = [0] * graph.n
        for v in graph.vertices():
            self.refresh(v)
        self.edges_h = sum(self.d_h) // 2

    def refresh(self, v: int) -> None:
        graph = self.graph
        on_left = v in self.left
        cross = [u for u in graph.neighbors(v) if (u in self.left) != on_left]
        self.d_h[v] = len(cross)
        self.dc_h[v] = len({graph.color(v, u) for u in cross})

    def value(self) -> int:
        return self.edges_h + sum(self.dc_h)

    def least_violator(self) -> Optional[int]:
        for v in self.graph.vertices():
            if 2 * self.dc_h[v] + 3 * self.d_h[v] < self.target[v]:
                return v
        return None

    def move(self, w: int) -> None:
        self.edges_h += self.graph.degree(w) - 2 * self.d_h[w]
        if w in self.left:
            self.left.discard(w)
        else:
            self.left.add(w)
        self.refresh(w)
        for u in self.graph.neighbors(w):
            self.refresh(u)

    def bipartition(self) -> Bipartition:
        return Bipartition.from_left(self.graph, self.left)


def lemma7_bipartize(
    graph: EdgeColoredGraph,
    rng: Optional[random.Random] = None,
    initial: Optional[Bipartition] = None,
) -> Tuple[Bipartition, SearchTrace]:
    """
    Run the local search from the parity split (or a seeded random split, or
    the given initial bipartition) until no vertex violates the inequality.

    The least violating vertex is moved each round. The search stops at the
    first split without violators; it does not climb to a maximum of f.

    Returns:
        tuple: (Bipartition, SearchTrace)
    """
    start = initial if initial is not None else initial_split(graph, rng)
    start.check_for(graph)
    state = _CutState(graph, start)
    trace = SearchTrace()

    while True:
        w = state.least_violator()
        if w is None:
            break
        before = state.value()
        state.move(w)
        after = state.value()
        if after <= before:
            raise RuntimeError(f"potential did not increase when moving {w}: {before} -> {after}")
        trace.moves.append(Move(w, before, after))

    result = state.bipartition()
    trace.final_potential = state.value()
    return result, trace

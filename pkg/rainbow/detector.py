"""Detection of heterochromatic (rainbow) cycles of length 3 and 4."""
from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence, Tuple

from core.errors import InputError
from core.graph import Cycle, EdgeColoredGraph


@dataclass(frozen=True)
class RainbowWitness:
    """A rainbow cycle together with its edge colors, in cycle order."""

    cycle: Cycle
    colors: Tuple[int, ...]

    @property
    def vertices(self) -> Tuple[int, ...]:
        return self.cycle.vertices

    def check_in(self, graph: EdgeColoredGraph) -> None:
        """Raise InputError unless this witness is a rainbow cycle of the graph."""
        self.cycle.check_in(graph)
        actual = tuple(graph.color(u, v) for u, v in self.cycle.edges())
        if actual != self.colors:
            raise InputError(f"witness colors {self.colors} differ from the graph's {actual}")
        if len(set(actual)) != len(actual):
            raise InputError(f"witness {self.vertices} is not rainbow")

    def to_dict(self):
        return {"cycle": list(self.vertices), "colors": list(self.colors)}

    def __str__(self):
        verts = " ".join(str(v) for v in self.vertices)
        cols = " ".join(str(c) for c in self.colors)
        return f"C{len(self.colors)} {verts} colors {cols}"


def make_witness(graph: EdgeColoredGraph, vertices: Sequence[int]) -> RainbowWitness:
    """Build the canonical-form witness for a cycle given in any rotation or direction."""
    cycle = Cycle(tuple(vertices)).canonical()
    cycle.check_in(graph)
    return RainbowWitness(cycle, tuple(graph.color(u, v) for u, v in cycle.edges()))


def is_rainbow(graph: EdgeColoredGraph, cycle: Cycle) -> bool:
    """
    Return True iff the edge colors along the cycle are pairwise distinct.

    Raises:
        InputError: When the cycle is not a cycle of the graph.
    """
    cycle.check_in(graph)
    colors = [graph.color(u, v) for u, v in cycle.edges()]
    return len(set(colors)) == len(colors)


def find_rainbow_c3(graph: EdgeColoredGraph) -> Optional[RainbowWitness]:
    """
    Return the lexicographically least rainbow triangle, or None.

    Triangles a<b<c are scanned in lexicographic order, which is also the
    order of their canonical forms.
    """
    for a in graph.vertices():
        upper = sorted(u for u in graph.neighbors(a) if u > a)
        for b, c in combinations(upper, 2):
            if not graph.has_edge(b, c):
                continue
            if len({graph.color(a, b), graph.color(b, c), graph.color(a, c)}) == 3:
                return make_witness(graph, (a, b, c))
    return None


def find_rainbow_c4(graph: EdgeColoredGraph) -> Optional[RainbowWitness]:
    """
    Return the lexicographically least rainbow 4-cycle, or None.

    For each pair {a, c} of opposite vertices, with a the smallest vertex of the
    cycle, the common neighbors b < d of a and c above a close the cycle
    a-b-c-d. Hits for the current a are collected and the least canonical form
    returned, so the scan short-circuits at the first a that has any.
    """
    for a in graph.vertices():
        nbrs_a = graph.neighbors(a)
        best = None
        for c in range(a + 1, graph.n):
            common = sorted(u for u in nbrs_a & graph.neighbors(c) if u > a)
            if len(common) < 2:
                continue
            for b, d in combinations(common, 2):
                if best is not None and (b, c, d) >= best[1:]:
                    continue
                colors = {graph.color(a, b), graph.color(b, c), graph.color(c, d), graph.color(d, a)}
                if len(colors) == 4:
                    best = (a, b, c, d)
        if best is not None:
            return make_witness(graph, best)
    return None

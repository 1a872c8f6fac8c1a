"""Bipartitions and the cross-edge subgraph H they induce."""
import random
from dataclasses import dataclass
from typing import FrozenSet, Iterable, Optional

from core.colors import restricted_color_neighborhood
from core.errors import InputError
from core.graph import EdgeColoredGraph


@dataclass(frozen=True)
class Bipartition:
    """A split (X, Y) of the vertex set; H is the set of all X-Y edges."""

    left: FrozenSet[int]
    right: FrozenSet[int]

    def __post_init__(self):
        object.__setattr__(self, "left", frozenset(self.left))
        object.__setattr__(self, "right", frozenset(self.right))

    @classmethod
    def from_left(cls, graph: EdgeColoredGraph, left: Iterable[int]) -> "Bipartition":
        left = frozenset(left)
        return cls(left, frozenset(graph.vertices()) - left)

    def check_for(self, graph: EdgeColoredGraph) -> None:
        """Raise InputError unless (X, Y) partitions V(G)."""
        if self.left & self.right:
            raise InputError(f"parts overlap on {sorted(self.left & self.right)}")
        if self.left | self.right != frozenset(graph.vertices()):
            raise InputError("parts do not cover exactly the vertices 0..n-1")

    def other_side(self, v: int) -> FrozenSet[int]:
        return self.right if v in self.left else self.left

    def move(self, v: int) -> "Bipartition":
        """Return the bipartition with v switched to the other part."""
        if v in self.left:
            return Bipartition(self.left - {v}, self.right | {v})
        return Bipartition(self.left | {v}, self.right - {v})

    def swapped(self) -> "Bipartition":
        return Bipartition(self.right, self.left)

    def normalized(self) -> "Bipartition":
        """Put the part holding vertex 0 on the left, for stable output."""
        return self if 0 in self.left or not self.right else self.swapped()

    def to_dict(self):
        return {"left": sorted(self.left), "right": sorted(self.right)}

    def __str__(self):
        left = " ".join(str(v) for v in sorted(self.left))
        right = " ".join(str(v) for v in sorted(self.right))
        return f"X: {left}\nY: {right}"


def parity_split(graph: EdgeColoredGraph) -> Bipartition:
    """Even ids on the left, odd ids on the right."""
    return Bipartition.from_left(graph, (v for v in graph.vertices() if v % 2 == 0))


def random_split(graph: EdgeColoredGraph, rng: random.Random) -> Bipartition:
    return Bipartition.from_left(graph, (v for v in graph.vertices() if rng.random() < 0.5))


def initial_split(graph: EdgeColoredGraph, rng: Optional[random.Random] = None) -> Bipartition:
    """Parity split by default, seeded random split when a generator is given."""
    return parity_split(graph) if rng is None else random_split(graph, rng)


def cross_degree(graph: EdgeColoredGraph, part: Bipartition, v: int) -> int:
    """d_H(v): neighbors of v on the other side."""
    other = part.other_side(v)
    return sum(1 for u in graph.neighbors(v) if u in other)


def cross_color_degree(graph: EdgeColoredGraph, part: Bipartition, v: int) -> int:
    """d^c_H(v): colors on edges from v to the other side."""
    return len(restricted_color_neighborhood(graph, v, part.other_side(v)))


def cross_edge_count(graph: EdgeColoredGraph, part: Bipartition) -> int:
    return sum(1 for u, v in graph.edges if (u in part.left) != (v in part.left))


def potential(graph: EdgeColoredGraph, part: Bipartition) -> int:
    """
    Return f(H) = |E(H)| + sum of d^c_H(v) over all vertices.

    Raises:
        InputError: When the bipartition does not partition V(G).
    """
    part.check_for(graph)
    return cross_edge_count(graph, part) + sum(
        cross_color_degree(graph, part, v) for v in graph.vertices()
    )


def cross_subgraph(graph: EdgeColoredGraph, part: Bipartition) -> EdgeColoredGraph:
    """H as a graph on all of V(G): the X-Y edges with their colors."""
    part.check_for(graph)
    return EdgeColoredGraph(
        graph.n,
        ((u, v, c) for u, v, c in graph.colored_edges() if (u in part.left) != (v in part.left)),
    )

"""Edge-colored simple graphs and cycles."""
import numbers
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Iterator, List, Mapping, Sequence, Tuple

import networkx as nx

from core.errors import InputError

Edge = Tuple[int, int]
ColorSet = FrozenSet[int]


def edge_key(u: int, v: int) -> Edge:
    """Return the canonical (min, max) form of an undirected edge."""
    return (u, v) if u < v else (v, u)


class EdgeColoredGraph:
    """
    Undirected simple graph on vertices 0..n-1 with a total edge coloring.

    Instances are immutable once built; every invariant is checked in the
    constructor so detectors and searches can share graphs freely.
    """

    __slots__ = ("_n", "_colors", "_edges", "_adjacency")

    def __init__(self, n: int, colored_edges: Iterable[Tuple[int, int, int]] = ()):
        """
        Build a graph from (u, v, color) triples.

        Args:
            n (int): Number of vertices, at least 1.
            colored_edges: Iterable of (u, v, color) triples.

        Raises:
            InputError: On a self-loop, parallel edge, out-of-range vertex or
                negative or non-integer color.
        """
        if not isinstance(n, int) or n < 1:
            raise InputError(f"vertex count must be a positive integer, got {n!r}")

        colors: Dict[Edge, int] = {}
        adjacency: List[set] = [set() for _ in range(n)]
        for u, v, c in colored_edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            if isinstance(c, bool) or not isinstance(c, numbers.Integral):
                raise InputError(f"edge ({u}, {v}) has non-integer color {c!r}")
            if c < 0:
                raise InputError(f"edge ({u}, {v}) has negative color {c}")
            key = edge_key(u, v)
            if key in colors:
                raise InputError(f"duplicate edge {key}")
            colors[key] = int(c)
            adjacency[u].add(v)
            adjacency[v].add(u)

        self._n = n
        self._colors = colors
        self._edges = tuple(sorted(colors))
        self._adjacency = tuple(frozenset(nbrs) for nbrs in adjacency)

    @classmethod
    def from_color_map(cls, n: int, color_map: Mapping[Edge, int]) -> "EdgeColoredGraph":
        """Build a graph from a {(u, v): color} mapping."""
        return cls(n, ((u, v, c) for (u, v), c in color_map.items()))

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> Tuple[Edge, ...]:
        """Edges in canonical (min endpoint, max endpoint) lexicographic order."""
        return self._edges

    def vertices(self) -> range:
        return range(self._n)

    def check_vertex(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self._n):
            raise InputError(f"vertex {v!r} is outside 0..{self._n - 1}")

    def has_edge(self, u: int, v: int) -> bool:
        return edge_key(u, v) in self._colors

    def color(self, u: int, v: int) -> int:
        """Return C(uv); raises InputError when uv is not an edge."""
        try:
            return self._colors[edge_key(u, v)]
        except KeyError:
            raise InputError(f"({u}, {v}) is not an edge") from None

    def neighbors(self, v: int) -> FrozenSet[int]:
        self.check_vertex(v)
        return self._adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def colored_edges(self) -> Iterator[Tuple[int, int, int]]:
        """Yield (u, v, color) in canonical edge order."""
        for u, v in self._edges:
            yield u, v, self._colors[(u, v)]

    def color_map(self) -> Dict[Edge, int]:
        return dict(self._colors)

    def palette(self) -> ColorSet:
        return frozenset(self._colors.values())

    def with_colors(self, color_map: Mapping[Edge, int]) -> "EdgeColoredGraph":
        """Return the same graph recolored; the mapping must cover every edge."""
        recolored = {}
        for key in self._edges:
            if key not in color_map:
                raise InputError(f"no color given for edge {key}")
            recolored[key] = color_map[key]
        return EdgeColoredGraph.from_color_map(self._n, recolored)

    def relabel_colors(self, relabel: Mapping[int, int]) -> "EdgeColoredGraph":
        """Apply a color relabeling to every edge."""
        return self.with_colors({key: relabel[c] for key, c in self._colors.items()})

    def permute_vertices(self, perm: Sequence[int]) -> "EdgeColoredGraph":
        """Return the graph with vertex v renamed to perm[v]."""
        if sorted(perm) != list(range(self._n)):
            raise InputError("vertex relabeling must be a permutation of 0..n-1")
        return EdgeColoredGraph(self._n, ((perm[u], perm[v], c) for u, v, c in self.colored_edges()))

    def induced_subgraph(self, vertices: Iterable[int]) -> Tuple["EdgeColoredGraph", Tuple[int, ...]]:
        """
        Return G[S] relabeled to 0..|S|-1 and the tuple mapping new ids to old ids.
        """
        kept = tuple(sorted(set(vertices)))
        for v in kept:
            self.check_vertex(v)
        if not kept:
            raise InputError("induced subgraph needs at least one vertex")
        index = {v: i for i, v in enumerate(kept)}
        triples = (
            (index[u], index[v], c)
            for u, v, c in self.colored_edges()
            if u in index and v in index
        )
        return EdgeColoredGraph(len(kept), triples), kept

    def to_networkx(self) -> nx.Graph:
        """Export as a networkx Graph with a `color` edge attribute."""
        graph = nx.Graph()
        graph.add_nodes_from(range(self._n))
        for u, v, c in self.colored_edges():
            graph.add_edge(u, v, color=c)
        return graph

    def __eq__(self, other):
        if not isinstance(other, EdgeColoredGraph):
            return NotImplemented
        return self._n == other._n and self._colors == other._colors

    def __hash__(self):
        return hash((self._n, tuple(self.colored_edges())))

    def __repr__(self):
        return f"EdgeColoredGraph(n={self._n}, m={self.m}, colors={len(self.palette())})"


@dataclass(frozen=True)
class Cycle:
    """A cycle given by its vertices in cyclic order."""

    vertices: Tuple[int, ...]

    def __post_init__(self):
        verts = tuple(self.vertices)
        object.__setattr__(self, "vertices", verts)
        if len(verts) < 3:
            raise InputError(f"a cycle needs at least 3 vertices, got {len(verts)}")
        if len(set(verts)) != len(verts):
            raise InputError(f"cycle vertices must be distinct: {verts}")

    def __len__(self):
        return len(self.vertices)

    def edges(self) -> List[Edge]:
        """Consecutive vertex pairs, closing back to the first vertex."""
        verts = self.vertices
        return [(verts[i], verts[(i + 1) % len(verts)]) for i in range(len(verts))]

    def canonical(self) -> "Cycle":
        """
        Rotate and reflect so the smallest vertex comes first and its smaller
        cycle neighbor second.
        """
        verts = self.vertices
        k = len(verts)
        i = verts.index(min(verts))
        forward = tuple(verts[(i + j) % k] for j in range(k))
        backward = tuple(verts[(i - j) % k] for j in range(k))
        return Cycle(forward if forward[1] < backward[1] else backward)

    def check_in(self, graph: EdgeColoredGraph) -> None:
        """Raise InputError unless every cycle edge is an edge of the graph."""
        for u, v in self.edges():
            graph.check_vertex(u)
            if not graph.has_edge(u, v):
                raise InputError(f"{self.vertices} is not a cycle of the graph: ({u}, {v}) missing")

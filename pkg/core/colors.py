"""Color neighborhoods and color degrees."""
from itertools import combinations
from typing import AbstractSet

from core.errors import InputError
from core.graph import ColorSet, EdgeColoredGraph


def color_neighborhood(graph: EdgeColoredGraph, v: int) -> ColorSet:
    """
    Return CN(v), the set of colors on edges incident to v.

    Args:
        graph (EdgeColoredGraph): Host graph.
        v (int): Vertex id.

    Returns:
        frozenset: Colors of the edges at v.
    """
    return frozenset(graph.color(v, u) for u in graph.neighbors(v))


def color_degree(graph: EdgeColoredGraph, v: int) -> int:
    return len(color_neighborhood(graph, v))


def restricted_color_neighborhood(graph: EdgeColoredGraph, v: int, subset: AbstractSet[int]) -> ColorSet:
    """
    Return CN_S(v) for the vertex subset S.

    For v outside S these are the colors of edges from v into S; for v inside S
    the colors of edges at v whose other end is also in S. Both readings come
    down to the neighbors of v that lie in S.
    """
    graph.check_vertex(v)
    for u in subset:
        graph.check_vertex(u)
    return frozenset(graph.color(v, u) for u in graph.neighbors(v) if u in subset)


def pairwise_color_union(graph: EdgeColoredGraph, u: int, v: int) -> int:
    """Return |CN(u) ∪ CN(v)| for two distinct vertices."""
    if u == v:
        raise InputError(f"pairwise color union needs two distinct vertices, got {u} twice")
    return len(color_neighborhood(graph, u) | color_neighborhood(graph, v))


def min_color_degree(graph: EdgeColoredGraph) -> int:
    """Return δ^c(G)."""
    return min(color_degree(graph, v) for v in graph.vertices())


def min_pairwise_color_union(graph: EdgeColoredGraph) -> int:
    """Return the minimum of |CN(u) ∪ CN(v)| over all unordered pairs."""
    if graph.n < 2:
        raise InputError("minimum pairwise color union needs at least 2 vertices")
    neighborhoods = [color_neighborhood(graph, v) for v in graph.vertices()]
    return min(len(neighborhoods[u] | neighborhoods[v]) for u, v in combinations(graph.vertices(), 2))

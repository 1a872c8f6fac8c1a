"""Incidence graphs of projective planes and their rainbow colorings."""
import math

import networkx as nx

from core.graph import EdgeColoredGraph
from projective.plane import ProjectivePlane


def incidence_graph(plane: ProjectivePlane) -> EdgeColoredGraph:
    """
    Return the point-line incidence graph as an uncolored shell.

    Point p is vertex p and line l is vertex N + l, with N = t^2 + t + 1. Every
    edge carries color 0 until `rainbow_color` assigns real colors.
    """
    offset = len(plane.points)
    return EdgeColoredGraph(
        offset + len(plane.lines),
        ((p, offset + l, 0) for l in plane.lines for p in sorted(plane.incidence[l])),
    )


def rainbow_color(graph: EdgeColoredGraph) -> EdgeColoredGraph:
    """Give edge i (canonical order) color i, so all colors are distinct."""
    return graph.with_colors({edge: i for i, edge in enumerate(graph.edges)})


def rainbow_incidence_graph(plane: ProjectivePlane) -> EdgeColoredGraph:
    return rainbow_color(incidence_graph(plane))


def neighborhood_union_size(graph: EdgeColoredGraph, u: int, v: int) -> int:
    """|N(u) ∪ N(v)|."""
    return len(graph.neighbors(u) | graph.neighbors(v))


def girth(graph: EdgeColoredGraph) -> float:
    """Length of a shortest cycle; infinity for a forest."""
    return nx.girth(graph.to_networkx())


def extremal_order(t: int) -> int:
    """Number of vertices 2(t^2 + t + 1) of the incidence graph of an order-t plane."""
    return 2 * (t * t + t + 1)


def extremal_bound(n: int) -> float:
    """sqrt(2n - 3), the pairwise union bound met by rainbow incidence graphs."""
    return math.sqrt(2 * n - 3)


def extremal_identity_holds(t: int) -> bool:
    """(2t + 1)^2 == 2n - 3 for n = 2(t^2 + t + 1)."""
    return (2 * t + 1) ** 2 == 2 * extremal_order(t) - 3

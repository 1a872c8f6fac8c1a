"""
Properly edge-colored complete graphs: exhaustive search for colorings of K_n
without a rainbow 4-cycle, and the four-vertex claim used to rule them out.
"""
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import List, Optional, Tuple

from config.config import CASE1_MAX_ORDER, CASE1_MIN_ORDER
from core.colors import color_degree
from core.errors import InputError, PreconditionError
from core.graph import EdgeColoredGraph
from utils.progress import display_progress


def is_properly_colored(graph: EdgeColoredGraph) -> bool:
    """True iff no two edges sharing a vertex have the same color."""
    return all(color_degree(graph, v) == graph.degree(v) for v in graph.vertices())


def is_complete(graph: EdgeColoredGraph) -> bool:
    return graph.m == graph.n * (graph.n - 1) // 2


@dataclass
class Case1Report:
    """
    Result of enumerating proper colorings of K_n up to color relabeling.

    `colorings_examined` counts complete colorings reached plus pruned
    prefixes; a prefix is pruned once its colored edges already contain a
    rainbow 4-cycle, since every completion keeps that cycle.
    """

    n: int
    complete_colorings: int = 0
    pruned_prefixes: int = 0
    failures: List[Tuple[int, ...]] = field(default_factory=list)

    @property
    def colorings_examined(self) -> int:
        return self.complete_colorings + self.pruned_prefixes

    def to_dict(self):
        return {
            "n": self.n,
            "colorings_examined": self.colorings_examined,
            "complete_colorings": self.complete_colorings,
            "pruned_prefixes": self.pruned_prefixes,
            "failures": [list(f) for f in self.failures],
        }

    def to_text(self) -> str:
        lines = [
            f"n={self.n}",
            f"colorings_examined={self.colorings_examined}",
            f"complete_colorings={self.complete_colorings}",
            f"pruned_prefixes={self.pruned_prefixes}",
            f"failures={len(self.failures)}",
        ]
        lines.extend("failure " + " ".join(str(c) for c in f) for f in self.failures)
        return "\n".join(lines) + "\n"


def complete_edges(n: int) -> List[Tuple[int, int]]:
    return list(combinations(range(n), 2))


def coloring_graph(n: int, colors: Tuple[int, ...]) -> EdgeColoredGraph:
    """K_n with edge i (lexicographic order) colored colors[i]."""
    return EdgeColoredGraph(n, ((u, v, c) for (u, v), c in zip(complete_edges(n), colors)))


def _closing_cycles(n: int, edges: List[Tuple[int, int]]):
    """For each edge index, the 4-cycles whose largest edge index it is."""
    index = {e: i for i, e in enumerate(edges)}
    closing = [[] for _ in edges]
    for a, b, c, d in combinations(range(n), 4):
        for order in ((a, b, c, d), (a, b, d, c), (a, c, b, d)):
            ids = [index[tuple(sorted((order[i], order[(i + 1) % 4])))] for i in range(4)]
            top = max(ids)
            closing[top].append(tuple(i for i in ids if i != top))
    return closing


def case1_exhaustive(n: int, prune: bool = True) -> Case1Report:
    """
    Enumerate every proper edge coloring of K_n up to relabeling of colors.

    Colors are assigned edge by edge in lexicographic edge order; an edge may
    take any already used color that is free at both ends, or the smallest
    unused id. Colorings with no rainbow 4-cycle are recorded as failures.

    Args:
        n (int): Order, 4 <= n <= 6.
        prune (bool): Cut a branch as soon as its colored edges contain a
            rainbow 4-cycle.

    Raises:
        InputError: When n is outside the enumeration bound.
    """
    if not (CASE1_MIN_ORDER <= n <= CASE1_MAX_ORDER):
        raise InputError(f"case 1 enumeration supports {CASE1_MIN_ORDER} <= n <= {CASE1_MAX_ORDER}, got {n}")

    display_progress(f"Enumerating proper colorings of K{n}...")
    edges = complete_edges(n)
    closing = _closing_cycles(n, edges)
    report = Case1Report(n)
    colors = [0] * len(edges)
    used_at = [set() for _ in range(n)]

    def extend(i, palette_size, has_rainbow):
        if i == len(edges):
            report.complete_colorings += 1
            if not has_rainbow:
                report.failures.append(tuple(colors))
            return
        u, v = edges[i]
        for c in range(palette_size + 1):
            if c in used_at[u] or c in used_at[v]:
                continue
            colors[i] = c
            closes_rainbow = any(
                len({c, colors[x], colors[y], colors[z]}) == 4 for x, y, z in closing[i]
            )
            if closes_rainbow and prune:
                report.pruned_prefixes += 1
                continue
            used_at[u].add(c)
            used_at[v].add(c)
            extend(i + 1, max(palette_size, c + 1), has_rainbow or closes_rainbow)
            used_at[u].discard(c)
            used_at[v].discard(c)

    extend(0, 0, False)
    report.failures.sort()
    display_progress(f"K{n}: {report.colorings_examined} colorings examined, {len(report.failures)} failures")
    return report


def claim9_check(graph: EdgeColoredGraph) -> Optional[Tuple[int, int, int, int]]:
    """
    Scan ordered quadruples (x1, x2, x3, x4) for C(x1x2) != C(x3x4) together
    with C(x2x3) != C(x1x4). On a complete, properly colored graph without a
    rainbow 4-cycle no such quadruple exists.

    Raises:
        PreconditionError: When the graph is not complete or not properly
            colored.
    """
    if not is_complete(graph):
        raise PreconditionError("claim check needs a complete graph")
    if not is_properly_colored(graph):
        raise PreconditionError("claim check needs a proper edge coloring")
    c = graph.color
    for x1, x2, x3, x4 in permutations(graph.vertices(), 4):
        if c(x1, x2) != c(x3, x4) and c(x2, x3) != c(x1, x4):
            return (x1, x2, x3, x4)
    return None

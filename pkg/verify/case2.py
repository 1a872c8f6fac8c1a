"""
Constructive walk through the case analysis behind the n >= 60 rainbow C4
theorem, and the arithmetic that fixes the bound 60.

Given a graph with |CN(u) ∪ CN(v)| >= n-1 for all pairs, `trace_theorem6`
follows the branch the argument takes on that graph and produces the cycle it
points to:

    case1            δ^c = n-1: G is complete and properly colored; any five
                     vertices carry a rainbow C4.
    subcase2.1       some z outside G1 = T ∪ {w} sees two new colors in G1;
                     w-x_s-z-x_t is rainbow.
    subcase2.2-small k <= n-6: G2 is complete and properly colored on >= 5
                     vertices; search five of them.
    subcase2.2-large k >= n-5: bipartize with the Lemma 7 search and look for
                     a rainbow C4 in H (guaranteed only from n >= 60).
"""
from dataclasses import dataclass
from typing import Optional, Tuple

from bipartize.lemma7 import lemma7_bipartize
from bipartize.partition import Bipartition, cross_color_degree, cross_subgraph
from config.config import THEOREMS
from core.colors import color_degree, color_neighborhood, min_color_degree, min_pairwise_color_union
from core.errors import PreconditionError
from core.graph import EdgeColoredGraph
from rainbow.detector import RainbowWitness, find_rainbow_c4, make_witness


@dataclass(frozen=True)
class ProofRoute:
    branch: str
    min_color_degree: int
    center: Optional[int] = None
    transversal: Tuple[int, ...] = ()
    remainder: Tuple[int, ...] = ()
    bipartition: Optional[Bipartition] = None
    witness: Optional[RainbowWitness] = None

    def to_dict(self):
        return {
            "branch": self.branch,
            "min_color_degree": self.min_color_degree,
            "center": self.center,
            "transversal": list(self.transversal),
            "remainder": list(self.remainder),
            "bipartition": self.bipartition.to_dict() if self.bipartition else None,
            "witness": self.witness.to_dict() if self.witness else None,
        }


def _five_vertex_search(graph: EdgeColoredGraph, vertices) -> Optional[RainbowWitness]:
    sub, kept = graph.induced_subgraph(sorted(vertices)[:5])
    found = find_rainbow_c4(sub)
    if found is None:
        return None
    return make_witness(graph, [kept[v] for v in found.vertices])


def rainbow_transversal(graph: EdgeColoredGraph, w: int) -> Tuple[int, ...]:
    """For each color at w (ascending), the least neighbor reached by that color."""
    chosen = {}
    for x in sorted(graph.neighbors(w)):
        chosen.setdefault(graph.color(w, x), x)
    return tuple(chosen[c] for c in sorted(chosen))


def trace_theorem6(graph: EdgeColoredGraph) -> ProofRoute:
    """
    Follow the case analysis on a concrete graph.

    Raises:
        PreconditionError: When n < 5 or some pair has |CN(u) ∪ CN(v)| < n-1.
    """
    n = graph.n
    if n < 5:
        raise PreconditionError("the case analysis needs at least 5 vertices")
    if min_pairwise_color_union(graph) < n - 1:
        raise PreconditionError("some pair has |CN(u) ∪ CN(v)| < n-1")

    k = min_color_degree(graph)
    if k == n - 1:
        return ProofRoute("case1", k, witness=_five_vertex_search(graph, graph.vertices()))

    w = next(v for v in graph.vertices() if color_degree(graph, v) == k)
    transversal = rainbow_transversal(graph, w)
    g1 = set(transversal) | {w}
    remainder = tuple(v for v in graph.vertices() if v not in g1)
    colors_w = color_neighborhood(graph, w)

    for z in remainder:
        fresh = {}
        for x in sorted(graph.neighbors(z) & g1):
            c = graph.color(z, x)
            if c not in colors_w:
                fresh.setdefault(c, x)
        if len(fresh) >= 2:
            c_s, c_t = sorted(fresh)[:2]
            cycle = (w, fresh[c_s], z, fresh[c_t])
            return ProofRoute(
                "subcase2.1", k, w, transversal, remainder, witness=make_witness(graph, cycle)
            )

    if k <= n - 6:
        return ProofRoute(
            "subcase2.2-small", k, w, transversal, remainder, witness=_five_vertex_search(graph, remainder)
        )

    part, _ = lemma7_bipartize(graph)
    found = find_rainbow_c4(cross_subgraph(graph, part))
    witness = make_witness(graph, found.vertices) if found else None
    return ProofRoute("subcase2.2-large", k, w, transversal, remainder, part.normalized(), witness)


def case2_color_degree_floor(n: int) -> float:
    """(2n - 22) / 5, the color-degree floor in H when δ^c(G) >= n-5."""
    return (2 * n - 22) / 5


def chaining_holds(n: int) -> bool:
    """Whether the floor beats the bipartite rainbow-C4 threshold at order n."""
    return case2_color_degree_floor(n) > THEOREMS["T5"]["threshold"](n)


def smallest_chaining_order(limit: int = 1000) -> int:
    """Least N such that the chain holds for every n in [N, limit]."""
    order = limit + 1
    for n in range(limit, 0, -1):
        if not chaining_holds(n):
            break
        order = n
    return order


def lemma7_floor_violation(graph: EdgeColoredGraph, part: Bipartition) -> Optional[int]:
    """
    Return the least v with 5 d^c_H(v) < 4 d^c_G(v) - 2 d_G(v), or None.

    The bound follows from the Lemma 7 inequality together with
    d_H(v) - d^c_H(v) <= d_G(v) - d^c_G(v); when d_G(v) - d^c_G(v) <= 4 it
    gives d^c_H(v) >= (d^c_G(v) + d_G(v) - 12) / 5.
    """
    for v in graph.vertices():
        if 5 * cross_color_degree(graph, part, v) < 4 * color_degree(graph, v) - 2 * graph.degree(v):
            return v
    return None

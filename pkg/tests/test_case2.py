import random

import pytest

from bipartize import lemma7_bipartize
from core.errors import PreconditionError
from core.graph import EdgeColoredGraph
from utils.generators import rainbow_graph
from verify import (
    case2_color_degree_floor,
    chaining_holds,
    lemma7_floor_violation,
    smallest_chaining_order,
    trace_theorem6,
)
from verify.case2 import rainbow_transversal


def rainbow_k5_with_repeat():
    # Rainbow K5 with edge 02 recolored to the color of 01
    triples = [(u, v, i) for i, (u, v) in enumerate((u, v) for u in range(5) for v in range(u + 1, 5))]
    return EdgeColoredGraph(5, [(u, v, 0 if (u, v) == (0, 2) else c) for u, v, c in triples])


def test_smallest_chaining_order():
    assert smallest_chaining_order() == 60
    assert chaining_holds(60)
    assert not chaining_holds(59)
    assert case2_color_degree_floor(60) == pytest.approx(19.6)


class TestTraceTheorem6:
    def test_full_color_degree_takes_case1(self, rainbow_k5):
        route = trace_theorem6(rainbow_k5)
        assert route.branch == "case1"
        assert route.min_color_degree == 4
        route.witness.check_in(rainbow_k5)

    def test_proper_k6_takes_case1(self, proper_k6):
        route = trace_theorem6(proper_k6)
        assert route.branch == "case1"
        assert route.witness is not None

    def test_fresh_colors_close_a_cycle(self):
        graph = rainbow_k5_with_repeat()
        route = trace_theorem6(graph)
        assert route.branch == "subcase2.1"
        assert route.center == 0
        assert route.transversal == (1, 3, 4)
        assert route.remainder == (2,)
        assert route.witness.vertices == (0, 1, 2, 3)
        route.witness.check_in(graph)
        assert route.to_dict()["witness"]["cycle"] == [0, 1, 2, 3]

    def test_transversal_picks_least_neighbor_per_color(self):
        assert rainbow_transversal(rainbow_k5_with_repeat(), 0) == (1, 3, 4)

    def test_preconditions(self, rainbow_k4):
        with pytest.raises(PreconditionError):
            trace_theorem6(rainbow_k4)
        sparse = EdgeColoredGraph(5, [(0, 1, 0), (1, 2, 1)])
        with pytest.raises(PreconditionError):
            trace_theorem6(sparse)

    def test_large_proper_graph(self, proper_k60):
        route = trace_theorem6(proper_k60)
        assert route.branch == "case1"
        route.witness.check_in(proper_k60)


@pytest.mark.parametrize("seed", range(20))
def test_lemma7_output_meets_color_degree_floor_on_rainbow_graphs(seed):
    rng = random.Random(seed)
    graph = rainbow_graph(rng.randint(2, 30), rng)
    part, _ = lemma7_bipartize(graph)
    assert lemma7_floor_violation(graph, part) is None

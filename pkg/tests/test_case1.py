import pytest

from core.errors import InputError, PreconditionError
from core.graph import EdgeColoredGraph
from rainbow import find_rainbow_c4
from utils.generators import proper_complete_graph, round_robin_coloring
from verify import case1_exhaustive, claim9_check, coloring_graph, is_complete, is_properly_colored

# 01 02 03 12 13 23: every failure keeps at least two of the three perfect matchings monochromatic
K4_FAILURES = [(0, 1, 2, 2, 1, 0), (0, 1, 2, 2, 1, 3), (0, 1, 2, 2, 3, 0), (0, 1, 2, 3, 1, 0)]


def test_k4_failures():
    report = case1_exhaustive(4)
    assert report.failures == K4_FAILURES
    for colors in report.failures:
        graph = coloring_graph(4, colors)
        assert is_properly_colored(graph)
        assert find_rainbow_c4(graph) is None


def test_pruning_does_not_change_failures():
    pruned = case1_exhaustive(4)
    full = case1_exhaustive(4, prune=False)
    assert full.failures == pruned.failures
    assert full.pruned_prefixes == 0
    assert full.complete_colorings >= pruned.complete_colorings


def test_k5_has_no_failures():
    report = case1_exhaustive(5)
    assert report.failures == []
    assert report.colorings_examined > 0
    assert "failures=0" in report.to_text().splitlines()


@pytest.mark.slow
def test_k6_has_no_failures():
    assert case1_exhaustive(6).failures == []


@pytest.mark.parametrize("n", [3, 7])
def test_order_bounds(n):
    with pytest.raises(InputError):
        case1_exhaustive(n)


def test_report_text_lists_failures():
    text = case1_exhaustive(4).to_text()
    assert "failures=4" in text
    assert "failure 0 1 2 2 1 0" in text


class TestClaim9:
    def test_no_quadruple_without_rainbow_c4(self):
        assert claim9_check(coloring_graph(4, K4_FAILURES[0])) is None

    def test_quadruple_found_in_larger_graph(self, proper_k6):
        x1, x2, x3, x4 = claim9_check(proper_k6)
        c = proper_k6.color
        assert c(x1, x2) != c(x3, x4) and c(x2, x3) != c(x1, x4)

    def test_preconditions(self, rainbow_k4, mono_k4):
        with pytest.raises(PreconditionError):
            claim9_check(EdgeColoredGraph(4, [(0, 1, 0)]))
        with pytest.raises(PreconditionError):
            claim9_check(mono_k4)
        assert is_complete(rainbow_k4)


@pytest.mark.parametrize("n", range(2, 12))
def test_round_robin_is_proper(n):
    graph = proper_complete_graph(n)
    assert is_complete(graph)
    assert is_properly_colored(graph)
    assert len({c for _, _, c in round_robin_coloring(n)}) == (n - 1 if n % 2 == 0 else n)

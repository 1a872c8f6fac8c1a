import random

import pytest
from hypothesis import given, settings

from core.ecg_format import parse, serialize
from core.errors import InputError, ParseError
from core.graph import EdgeColoredGraph
from hunt import (
    Conjecture10Hunt,
    Digraph,
    HuntReport,
    Problem9Hunt,
    brute_force_directed_c4,
    conjecture10_check,
    conjecture10_hunt,
    conjecture10_hypothesis,
    find_directed_c4,
    instance_hash,
    parse_dcg,
    problem9_exhaustive,
    problem9_hunt,
    sample_threshold_digraph,
    serialize_dcg,
    verify_problem9_bound,
)
from strategies import bipartite_digraphs


def directed_square():
    return Digraph(2, 2, [(0, 2), (2, 1), (1, 3), (3, 0)])


class TestDigraph:
    def test_find_directed_c4(self):
        assert find_directed_c4(directed_square()) == ((0, 2), (2, 1), (1, 3), (3, 0))

    def test_one_way_arcs_have_no_cycle(self):
        digraph = Digraph(2, 2, [(0, 2), (0, 3), (1, 2), (1, 3)])
        assert find_directed_c4(digraph) is None

    def test_both_ways_have_a_cycle(self):
        arcs = [(a, b) for a in (0, 1) for b in (2, 3)] + [(b, a) for a in (0, 1) for b in (2, 3)]
        digraph = Digraph(2, 2, arcs)
        assert find_directed_c4(digraph) is not None
        assert not digraph.is_oriented()

    @pytest.mark.parametrize("a_size, b_size, arcs", [(0, 2, []), (2, 2, [(0, 1)]), (2, 2, [(0, 2), (0, 2)]), (2, 2, [(0, 4)])])
    def test_invalid_digraphs(self, a_size, b_size, arcs):
        with pytest.raises(InputError):
            Digraph(a_size, b_size, arcs)

    def test_dcg_text(self):
        text = serialize_dcg(directed_square())
        assert text == "dcg 2 2 4\n0 2\n1 3\n2 1\n3 0\n"
        assert parse_dcg(text) == directed_square()

    @pytest.mark.parametrize(
        "text, line",
        [("", 1), ("dcg 2 2\n", 1), ("dcg 2 2 1\n0\n", 2), ("dcg 2 2 2\n0 2\n", 2), ("dcg 2 2 1\n0 1\n", 2)],
    )
    def test_dcg_errors(self, text, line):
        with pytest.raises(ParseError) as excinfo:
            parse_dcg(text)
        assert excinfo.value.line_number == line

    @settings(max_examples=200, deadline=None)
    @given(bipartite_digraphs())
    def test_detector_matches_brute_force(self, digraph):
        fast = find_directed_c4(digraph)
        slow = brute_force_directed_c4(digraph)
        assert (fast is None) == (slow is None)
        if fast is not None:
            assert all(arc in digraph.arcs for arc in fast)


class TestConjecture10Check:
    def test_three_by_three_with_out_degree_two(self):
        arcs = []
        for i in range(3):
            arcs += [(i, 3 + i), (i, 3 + (i + 1) % 3)]
            arcs += [(3 + i, i), (3 + i, (i + 1) % 3)]
        holds, margin, _ = conjecture10_hypothesis(Digraph(3, 3, arcs))
        assert holds
        assert margin == pytest.approx(2 / 3)
        assert conjecture10_check(Digraph(3, 3, arcs)).conclusion_holds

    def test_empty_digraph(self):
        verdict = conjecture10_check(Digraph(2, 2))
        assert not verdict.hypothesis_holds
        assert verdict.witness is None

    def test_one_way_complete(self):
        digraph = Digraph(3, 3, [(a, b) for a in range(3) for b in range(3, 6)])
        assert not conjecture10_check(digraph).hypothesis_holds

    def test_square(self):
        verdict = conjecture10_check(directed_square())
        assert verdict.hypothesis_holds
        assert verdict.conclusion_holds
        assert str(verdict.witness) == "DC4 0 -> 2 -> 1 -> 3 -> 0"
        assert not verdict.is_violation

    def test_digons_defeat_the_literal_statement(self):
        verdict = conjecture10_check(Digraph(2, 2, [(0, 2), (2, 0), (1, 3), (3, 1)]))
        assert verdict.is_violation

    def test_hunt_recheck_requires_orientation(self):
        hunt = Conjecture10Hunt((2, 2))
        digons = Digraph(2, 2, [(0, 2), (2, 0), (1, 3), (3, 1)])
        assert hunt.is_candidate(digons)
        assert not hunt.recheck(serialize_dcg(digons))

    @pytest.mark.parametrize("seed", range(30))
    def test_threshold_sampler_is_oriented(self, seed):
        digraph = sample_threshold_digraph(1 + seed % 9, 1 + seed // 4, random.Random(seed))
        assert digraph.is_oriented()
        assert digraph == sample_threshold_digraph(digraph.a_size, digraph.b_size, random.Random(seed))


class TestProblem9:
    def test_single_edge_splits_its_ends(self):
        graph = EdgeColoredGraph(2, [(0, 1, 0)])
        part = problem9_exhaustive(graph, heuristics=False)
        assert (0 in part.left) != (1 in part.left)

    def test_monochromatic_triangle(self, mono_k3):
        assert verify_problem9_bound(mono_k3, problem9_exhaustive(mono_k3)) is None

    def test_rainbow_k4(self, rainbow_k4):
        part = problem9_exhaustive(rainbow_k4)
        assert verify_problem9_bound(rainbow_k4, part) is None

    def test_enumeration_without_heuristics(self, mono_k4, proper_k6):
        for graph in (mono_k4, proper_k6, EdgeColoredGraph(1)):
            part = problem9_exhaustive(graph, heuristics=False)
            assert part is not None
            assert verify_problem9_bound(graph, part) is None

    def test_order_bound(self):
        with pytest.raises(InputError, match="problem9_hunt"):
            problem9_exhaustive(EdgeColoredGraph(25))

    def test_hunt_range_validation(self):
        with pytest.raises(InputError):
            Problem9Hunt((5, 30))
        with pytest.raises(InputError):
            Conjecture10Hunt((0, 3))


class TestHuntRuns:
    def test_problem9_is_deterministic(self):
        first = problem9_hunt((4, 8), budget=20, seed=11)
        second = problem9_hunt((4, 8), budget=20, seed=11)
        assert first.to_text() == second.to_text()
        assert first.to_json() == second.to_json()
        assert first.instances == 20
        assert all(c.confirmed for c in first.candidates)

    def test_concurrent_matches_sequential(self):
        sequential = conjecture10_hunt((2, 5), budget=40, seed=3)
        concurrent = conjecture10_hunt((2, 5), budget=40, seed=3, use_concurrent=True, workers=4)
        assert sequential.to_text() == concurrent.to_text()

    def test_report_header_and_labels(self):
        report = conjecture10_hunt((2, 3), budget=10, seed=0)
        lines = report.to_text().splitlines()
        assert lines[0] == f"instances=10 candidates={len(report.candidates)} rejected={report.rejected}"
        assert lines[1] == "hunt=conjecture10"
        labels = [line for line in lines if line.startswith("label ")]
        assert sum(int(line.split()[2]) for line in labels) == 10

    def test_budget_must_be_positive(self):
        with pytest.raises(InputError):
            problem9_hunt(budget=0)

    def test_candidates_are_rechecked_from_text(self):
        class AlwaysFlag(Problem9Hunt):
            def is_candidate(self, graph):
                return True

        report = AlwaysFlag((3, 4)).run(5, seed=1)
        distinct = len(set(report.samples["instance_hash"]))
        assert len(report.candidates) + report.rejected == distinct
        for candidate in report.candidates:
            assert problem9_exhaustive(parse(candidate.instance_text), heuristics=False) is None
            assert candidate.confirmed

    def test_instance_hash_is_stable(self, rainbow_k4):
        text = serialize(rainbow_k4)
        assert instance_hash(text) == instance_hash(serialize(EdgeColoredGraph.from_color_map(4, rainbow_k4.color_map())))
        assert len(instance_hash(text)) == 16

    def test_empty_report_renders(self):
        report = HuntReport("problem9", 0, {"seed": 0})
        assert report.to_text().startswith("instances=0 candidates=0 rejected=0\n")

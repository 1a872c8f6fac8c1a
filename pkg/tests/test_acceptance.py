"""Full-size runs of the seeded checks; deselect with -m "not slow"."""
import random
import time

import pytest

from bipartize import erdos_bipartize, lemma7_bipartize, verify_erdos_guarantee, verify_lemma7_guarantee
from config.config import GENERATOR_MODELS
from hunt import Digraph, brute_force_directed_c4, conjecture10_hunt, find_directed_c4, problem9_hunt
from rainbow import find_rainbow_c3, find_rainbow_c4, oracle_rainbow_ck
from utils.generators import generate
from verify import case1_exhaustive, check_hypothesis, check_theorem, confirm_violation

pytestmark = pytest.mark.slow


def seeded_graphs(count, max_n):
    for i in range(count):
        rng = random.Random(i)
        model = GENERATOR_MODELS[i % len(GENERATOR_MODELS)]
        yield generate(model, rng.randint(1, max_n), rng)


def test_bipartization_guarantees_on_1000_graphs():
    for graph in seeded_graphs(1000, 50):
        part, trace = lemma7_bipartize(graph)
        assert verify_lemma7_guarantee(graph, part) is None
        assert trace.is_strictly_increasing()
        assert len(trace.moves) <= 3 * graph.m
        assert verify_erdos_guarantee(graph, erdos_bipartize(graph)) is None


def test_detectors_match_oracle_on_2000_graphs():
    for graph in seeded_graphs(2000, 8):
        assert (find_rainbow_c3(graph) is None) == (not oracle_rainbow_ck(graph, 3))
        assert (find_rainbow_c4(graph) is None) == (not oracle_rainbow_ck(graph, 4))


@pytest.mark.parametrize("n", [5, 6])
def test_case1_engine(n):
    assert case1_exhaustive(n).failures == []


def test_problem9_hunt():
    first = problem9_hunt((4, 14), budget=1000, seed=0)
    assert first.candidates == []
    assert first.to_text() == problem9_hunt((4, 14), budget=1000, seed=0).to_text()


def test_conjecture10_hunt():
    first = conjecture10_hunt((1, 9), budget=10000, seed=0)
    assert first.candidates == []
    assert first.to_text() == conjecture10_hunt((1, 9), budget=10000, seed=0).to_text()


def test_proper_k60_witness_within_a_second(proper_k60):
    assert check_hypothesis(proper_k60, 6) == (True, 0)
    start = time.perf_counter()
    witness = find_rainbow_c4(proper_k60)
    elapsed = time.perf_counter() - start
    assert witness is not None
    assert elapsed < 1.0


def theorem1_instances(count):
    """Seeded graphs of order 4..12 that meet the pairwise-union condition of T1."""
    models = ["proper-complete", "dense", "rainbow"]
    found, seed = [], 0
    while len(found) < count:
        rng = random.Random(seed)
        model = models[seed % len(models)]
        p = rng.choice([0.8, 0.9, 1.0]) if model == "rainbow" else None
        graph = generate(model, rng.randint(4, 12), rng, p)
        if check_hypothesis(graph, 1)[0]:
            found.append(graph)
        seed += 1
        assert seed < 50 * count, "too few instances meet the condition"
    return found


def test_theorem1_on_500_seeded_instances():
    violations = []
    for graph in theorem1_instances(500):
        verdict = check_theorem(graph, 1)
        assert verdict.hypothesis_holds
        if verdict.is_violation and confirm_violation(graph, verdict):
            violations.append(graph)
    assert violations == []


def seeded_digraph(seed):
    rng = random.Random(seed)
    a_size = rng.randint(1, 7)
    b_size = rng.randint(1, 8 - a_size)
    p = rng.choice([0.3, 0.5, 0.7])
    part_a, part_b = range(a_size), range(a_size, a_size + b_size)
    arcs = [(a, b) for a in part_a for b in part_b if rng.random() < p]
    arcs += [(b, a) for a in part_a for b in part_b if rng.random() < p]
    return Digraph(a_size, b_size, arcs)


def test_directed_c4_detector_on_500_seeded_digraphs():
    mismatches = []
    for seed in range(500):
        digraph = seeded_digraph(seed)
        assert digraph.a_size + digraph.b_size <= 8
        if (find_directed_c4(digraph) is None) != (brute_force_directed_c4(digraph) is None):
            mismatches.append(seed)
    assert mismatches == []

"""
Search for a directed bipartite graph meeting the one-third out-degree
conditions but containing no directed 4-cycle.
"""
import math
import random
from dataclasses import dataclass

from config.config import CONJECTURE10_PART_RANGE
from core.errors import InputError
from hunt.base_hunt import BaseHunt
from hunt.digraph import (
    Digraph,
    DirectedCycle,
    brute_force_directed_c4,
    find_directed_c4,
    parse_dcg,
    serialize_dcg,
)
from verify.verdict import Verdict


@dataclass(frozen=True)
class DirectedWitness:
    arcs: DirectedCycle

    def to_dict(self):
        return {"arcs": [list(arc) for arc in self.arcs]}

    def __str__(self):
        a, b, a2, b2 = (arc[0] for arc in self.arcs)
        return f"DC4 {a} -> {b} -> {a2} -> {b2} -> {a}"


def _slacks(digraph: Digraph):
    """Minimum of 3 d^+(u) - |B| over A and of 3 d^+(v) - |A| over B."""
    slack_a = min(3 * digraph.out_degree(u) - digraph.b_size for u in digraph.part_a)
    slack_b = min(3 * digraph.out_degree(v) - digraph.a_size for v in digraph.part_b)
    return slack_a, slack_b


def conjecture10_hypothesis(digraph: Digraph):
    """
    Evaluate both variants of the degree condition.

    Variant "A strict": d^+(u) > |B|/3 on A and d^+(v) >= |A|/3 on B.
    Variant "B strict": d^+(u) >= |B|/3 on A and d^+(v) > |A|/3 on B.
    All comparisons are done on 3 d^+ to stay in integers.

    Returns:
        tuple: (holds, margin in out-degree units, name of the better variant)
    """
    slack_a, slack_b = _slacks(digraph)
    a_strict = min(slack_a - 1, slack_b)
    b_strict = min(slack_a, slack_b - 1)
    if a_strict >= b_strict:
        return a_strict >= 0, a_strict / 3, "A strict"
    return b_strict >= 0, b_strict / 3, "B strict"


def conjecture10_check(digraph: Digraph) -> Verdict:
    holds, margin, binding = conjecture10_hypothesis(digraph)
    cycle = find_directed_c4(digraph)
    witness = DirectedWitness(cycle) if cycle is not None else None
    return Verdict("C10", holds, cycle is not None, witness, margin, binding)


def sample_threshold_digraph(a_size: int, b_size: int, rng: random.Random) -> Digraph:
    """
    Random oriented bipartite graph with out-degrees at the one-third boundary.

    Vertices of A pick between floor(|B|/3) and ceil(|B|/3)+1 out-neighbors in
    B, then vertices of B do the same in A among the vertices that do not
    already point at them. No pair gets arcs both ways, so the result is
    oriented; a B vertex with too few free targets takes all of them.
    """
    if a_size < 1 or b_size < 1:
        raise InputError(f"both parts need at least one vertex, got |A|={a_size} |B|={b_size}")
    arcs = []
    out = {}
    for sources, targets in ((range(a_size), range(a_size, a_size + b_size)),
                             (range(a_size, a_size + b_size), range(a_size))):
        size = len(targets)
        low = size // 3
        high = min(size, math.ceil(size / 3) + 1)
        for u in sources:
            free = [v for v in targets if u not in out.get(v, ())]
            degree = min(rng.randint(low, high), len(free))
            for v in sorted(rng.sample(free, degree)):
                arcs.append((u, v))
                out.setdefault(u, set()).add(v)
    return Digraph(a_size, b_size, arcs)


class Conjecture10Hunt(BaseHunt):
    """Samples threshold digraphs and flags hypothesis-true, 4-cycle-free ones."""

    def __init__(self, part_range=CONJECTURE10_PART_RANGE):
        low, high = part_range
        if not (1 <= low <= high):
            raise InputError(f"part sizes must satisfy 1 <= low <= high, got {part_range}")
        super().__init__("conjecture10", {"part_range": (low, high), "model": "threshold-digraph"})
        self.part_range = (low, high)

    def draw(self, rng):
        a_size = rng.randint(*self.part_range)
        b_size = rng.randint(*self.part_range)
        return sample_threshold_digraph(a_size, b_size, rng)

    def label(self, digraph):
        return f"{digraph.a_size}x{digraph.b_size}"

    def order(self, digraph):
        return digraph.a_size + digraph.b_size

    def is_candidate(self, digraph):
        return conjecture10_check(digraph).is_violation

    def serialize(self, digraph):
        return serialize_dcg(digraph)

    def recheck(self, text):
        # Candidates must be oriented
        digraph = parse_dcg(text)
        if not digraph.is_oriented():
            return False
        holds, _, _ = conjecture10_hypothesis(digraph)
        return holds and brute_force_directed_c4(digraph) is None


def conjecture10_hunt(part_range=CONJECTURE10_PART_RANGE, budget=10000, seed=0, use_concurrent=False, workers=1):
    """Run the Conjecture 10 hunt and return its HuntReport."""
    return Conjecture10Hunt(part_range).run(budget, seed, use_concurrent, workers)

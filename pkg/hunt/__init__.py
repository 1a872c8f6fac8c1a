"""
Hunt package.

This package contains the counterexample searches for the color-degree
bipartization problem and the directed 4-cycle conjecture.
"""
from hunt.digraph import (
    Digraph,
    brute_force_directed_c4,
    find_directed_c4,
    parse_dcg,
    read_digraph,
    serialize_dcg,
)
from hunt.report import Candidate, HuntReport, instance_hash
from hunt.base_hunt import BaseHunt
from hunt.problem9 import Problem9Hunt, problem9_exhaustive, problem9_hunt, verify_problem9_bound
from hunt.conjecture10 import (
    Conjecture10Hunt,
    DirectedWitness,
    conjecture10_check,
    conjecture10_hunt,
    conjecture10_hypothesis,
    sample_threshold_digraph,
)

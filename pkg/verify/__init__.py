"""
Verification package.

This package contains the theorem checkers, the exhaustive engine for properly
colored complete graphs and the constructive case analysis for n >= 60.
"""
from verify.verdict import Verdict
from verify.theorems import (
    check_hypothesis,
    check_theorem,
    confirm_violation,
    evaluate_hypothesis,
    required_value,
    theorem_id,
)
from verify.case1 import Case1Report, case1_exhaustive, claim9_check, coloring_graph, is_complete, is_properly_colored
from verify.case2 import (
    ProofRoute,
    case2_color_degree_floor,
    chaining_holds,
    lemma7_floor_violation,
    smallest_chaining_order,
    trace_theorem6,
)

"""Hypothesis and conclusion checkers for the six rainbow-cycle theorems."""
import math
from typing import Tuple, Union

import networkx as nx

from config.config import ORACLE_MAX_ORDER, THEOREMS, THRESHOLD_EPSILON
from core.colors import min_color_degree, min_pairwise_color_union
from core.errors import InputError, PreconditionError
from core.graph import EdgeColoredGraph
from rainbow.detector import find_rainbow_c3, find_rainbow_c4
from rainbow.oracle import oracle_rainbow_ck
from verify.verdict import Verdict


def theorem_id(theorem: Union[str, int]) -> str:
    """Normalize 6, "6", "t6" and "T6" to "T6"."""
    key = str(theorem).strip().upper()
    if not key.startswith("T"):
        key = "T" + key
    if key not in THEOREMS:
        raise InputError(f"unknown theorem {theorem!r}; expected one of {', '.join(THEOREMS)}")
    return key


def required_value(threshold: float) -> int:
    """Least integer satisfying `value >= threshold`, with float slack epsilon."""
    return math.ceil(threshold - THRESHOLD_EPSILON)


def _check_precondition(graph: EdgeColoredGraph, key: str) -> None:
    requires = THEOREMS[key]["requires"]
    if requires == "triangle-free":
        if any(nx.triangles(graph.to_networkx()).values()):
            raise PreconditionError(f"{key} applies to triangle-free graphs only")
    elif requires == "bipartite":
        if not nx.is_bipartite(graph.to_networkx()):
            raise PreconditionError(f"{key} applies to bipartite graphs only")


def evaluate_hypothesis(graph: EdgeColoredGraph, theorem: Union[str, int]) -> Tuple[bool, int, str]:
    """Return (holds, margin, binding condition) for one theorem."""
    key = theorem_id(theorem)
    entry = THEOREMS[key]
    _check_precondition(graph, key)

    n = graph.n
    if n < entry["min_order"]:
        return False, n - entry["min_order"], "order"

    needed = required_value(entry["threshold"](n))
    if entry["condition"] == "pairwise":
        value = min_pairwise_color_union(graph)
        binding = "min pairwise color union"
    else:
        value = min_color_degree(graph)
        binding = "min color degree"
    margin = value - needed
    return margin >= 0, margin, binding


def check_hypothesis(graph: EdgeColoredGraph, theorem: Union[str, int]) -> Tuple[bool, int]:
    """
    Evaluate the order bound and degree threshold of a theorem.

    Raises:
        PreconditionError: T4 on a graph with a triangle, T5 on a
            non-bipartite graph.
    """
    holds, margin, _ = evaluate_hypothesis(graph, theorem)
    return holds, margin


def find_conclusion_witness(graph: EdgeColoredGraph, conclusion: str):
    if conclusion == "c3":
        return find_rainbow_c3(graph)
    if conclusion == "c4":
        return find_rainbow_c4(graph)
    return find_rainbow_c3(graph) or find_rainbow_c4(graph)


def check_theorem(graph: EdgeColoredGraph, theorem: Union[str, int]) -> Verdict:
    """Combine the hypothesis check with the detector for the theorem's conclusion."""
    key = theorem_id(theorem)
    holds, margin, binding = evaluate_hypothesis(graph, key)
    witness = find_conclusion_witness(graph, THEOREMS[key]["conclusion"])
    return Verdict(key, holds, witness is not None, witness, margin, binding)


def confirm_violation(graph: EdgeColoredGraph, verdict: Verdict) -> bool:
    """
    Re-check a hypothesis-true, conclusion-false verdict with the brute-force
    oracle. Returns True only when the oracle agrees that no cycle exists.
    """
    if not verdict.is_violation:
        return False
    if graph.n > ORACLE_MAX_ORDER:
        return find_conclusion_witness(graph, THEOREMS[verdict.theorem]["conclusion"]) is None
    conclusion = THEOREMS[verdict.theorem]["conclusion"]
    lengths = {"c3": [3], "c4": [4], "c3-or-c4": [3, 4]}[conclusion]
    return all(not oracle_rainbow_ck(graph, k) for k in lengths)

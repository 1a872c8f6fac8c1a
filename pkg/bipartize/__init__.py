"""
Bipartization package.

This package contains the Lemma 7 potential local search and the classical
max-cut bipartization it is compared against.
"""
from bipartize.partition import (
    Bipartition,
    cross_color_degree,
    cross_degree,
    cross_edge_count,
    cross_subgraph,
    initial_split,
    parity_split,
    potential,
    random_split,
)
from bipartize.lemma7 import Move, SearchTrace, lemma7_bipartize, lemma7_slack, verify_lemma7_guarantee
from bipartize.erdos import erdos_bipartize, verify_erdos_guarantee

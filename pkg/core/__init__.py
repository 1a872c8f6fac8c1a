"""
Core package for edge-colored graphs.

This package contains the graph data model, color-neighborhood computations
and the `.ecg` text format.
"""
from core.errors import HunterError, InputError, ParseError, PreconditionError, UnsupportedError
from core.graph import ColorSet, Cycle, EdgeColoredGraph, edge_key
from core.colors import (
    color_degree,
    color_neighborhood,
    min_color_degree,
    min_pairwise_color_union,
    pairwise_color_union,
    restricted_color_neighborhood,
)
from core.ecg_format import parse, parse_int, read_graph, read_text, serialize, write_graph

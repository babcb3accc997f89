"""Exact proper disconnection numbers of small graphs, with certificates."""

from .bounds import (
    classify_diameter2_outerplanar,
    compose_blocks,
    is_outerplanar,
    lower_bound_common_neighbors,
    upper_bound,
)
from .canon import are_isomorphic, canonical_form, enumerate_connected_graphs
from .coloring import EdgeColoring, PdCertificate, find_proper_cut, is_proper_set, verify_pd_coloring
from .graph import Graph, block_decomposition, emit_graph6, parse_graph6
from .solver import PdResult, SolveBudget, chromatic_index, pd_exact, pd_is_one

__all__ = [
    "EdgeColoring", "Graph", "PdCertificate", "PdResult", "SolveBudget",
    "are_isomorphic", "block_decomposition", "canonical_form", "chromatic_index",
    "classify_diameter2_outerplanar", "compose_blocks", "emit_graph6",
    "enumerate_connected_graphs", "find_proper_cut", "is_outerplanar", "is_proper_set",
    "lower_bound_common_neighbors", "parse_graph6", "pd_exact", "pd_is_one",
    "upper_bound", "verify_pd_coloring",
]

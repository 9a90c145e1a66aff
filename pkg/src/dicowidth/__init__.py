"""Directed path-width and directed tree-width of directed co-graphs.

Widths come from a linear-time fold over expression trees; every value can be
backed by a decomposition that the verifiers check against the axioms, and by
an exact exponential oracle on small inputs.
"""
from .build import (
    build_path_decomposition,
    build_tree_decomposition,
    normalize_singleton_bags,
    path_to_tree_decomposition,
)
from .decomposition import ArborealDecomposition, PathDecomposition
from .digraph import (
    CapExceeded,
    Condensation,
    Digraph,
    GraphError,
    UndirectedGraph,
    build_digraph,
    complement_digraph,
    complete_biorientation,
    converse_digraph,
    induced_subdigraph,
    largest_bioriented_clique,
    strong_components,
    underlying,
)
from .expr import binarize, evaluate, format_expr, parse_expr, recognize_di_cograph, strong_component_expression
from .oracle import dpw_exact, dtw_bracket, pw_exact_undirected
from .verify import Verdict, is_z_normal, verify_path_decomposition, verify_tree_decomposition
from .width import annotate, compute_dpw, compute_dtw, width_of_digraph

__all__ = [
    "ArborealDecomposition", "CapExceeded", "Condensation", "Digraph", "GraphError",
    "PathDecomposition", "UndirectedGraph", "Verdict", "annotate", "binarize",
    "build_digraph", "build_path_decomposition", "build_tree_decomposition",
    "complement_digraph", "complete_biorientation", "compute_dpw", "compute_dtw",
    "converse_digraph", "dpw_exact", "dtw_bracket", "evaluate", "format_expr",
    "induced_subdigraph", "is_z_normal", "largest_bioriented_clique",
    "normalize_singleton_bags", "parse_expr", "path_to_tree_decomposition",
    "pw_exact_undirected", "recognize_di_cograph", "strong_component_expression",
    "strong_components", "underlying", "verify_path_decomposition",
    "verify_tree_decomposition", "width_of_digraph",
]

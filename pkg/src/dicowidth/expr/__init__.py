"""Expression trees (di-co-trees and ex-di-co-trees): syntax, evaluation, recognition."""
from .ast import (
    Block,
    Expr,
    ExprError,
    Leaf,
    Node,
    Op,
    binarize,
    canonical,
    evaluate,
    has_blocks,
    is_binary,
    is_di_co_tree,
    is_ex_di_co_tree,
    labels,
    leaf_sets,
    postorder,
    subtree_sizes,
    to_directed_unions,
    validate,
)
from .parser import ParseError, format_expr, parse_expr
from .recognize import NotACograph, is_di_cograph, recognize_di_cograph, strong_component_expression

__all__ = [
    "Block", "Expr", "ExprError", "Leaf", "Node", "Op", "NotACograph", "ParseError",
    "binarize", "canonical", "evaluate", "format_expr", "has_blocks", "is_binary",
    "is_di_co_tree", "is_di_cograph", "is_ex_di_co_tree", "labels", "leaf_sets",
    "parse_expr", "postorder", "recognize_di_cograph", "strong_component_expression",
    "subtree_sizes", "to_directed_unions", "validate",
]

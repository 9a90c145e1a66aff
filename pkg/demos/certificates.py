"""Decompositions that back the computed widths, and two ways to reshape them."""
from dicowidth import (
    annotate,
    binarize,
    build_path_decomposition,
    build_tree_decomposition,
    evaluate,
    normalize_singleton_bags,
    parse_expr,
    path_to_tree_decomposition,
    verify_path_decomposition,
    verify_tree_decomposition,
)
from dicowidth.decomposition import format_path_decomposition, format_tree_decomposition

e = binarize(parse_expr("du(a * b, (c + d) * e; b->c, a->e)"))
g = evaluate(e)
print("dpw =", annotate(e).root_dpw)

path = build_path_decomposition(e)
print(format_path_decomposition(path), end="")
print(verify_path_decomposition(g, path).format())

tree = build_tree_decomposition(e)
print(format_tree_decomposition(tree), end="")
print(verify_tree_decomposition(g, tree).format())

# a path decomposition converts to an arboreal one of no larger width
converted = path_to_tree_decomposition(path, g)
print("converted:", verify_tree_decomposition(g, converted).format(), end="")

# and every node can be split until it holds one vertex
single = normalize_singleton_bags(converted, g)
print("nodes after normalization:", len(single), "width", single.width)

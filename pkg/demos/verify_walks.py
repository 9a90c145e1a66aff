"""Checking certificates by hand, and what a broken one looks like."""
from dicowidth import Digraph, PathDecomposition, is_z_normal, verify_path_decomposition, verify_tree_decomposition
from dicowidth.decomposition import parse_decomposition

cycle = Digraph("abc", [("a", "b"), ("b", "c"), ("c", "a")])

# {a} is not normal: a walk leaves it and comes back
print(is_z_normal(cycle, {"a"}, set()))
# guarding b cuts the walk
print(is_z_normal(cycle, {"a"}, {"b"}))

# a path decomposition that puts the head of an arc too early
bad = PathDecomposition.of([{"b"}, {"c"}, {"a"}])
print(verify_path_decomposition(cycle, bad).format(), end="")
good = PathDecomposition.of([{"a", "b"}, {"a", "c"}])
print(verify_path_decomposition(cycle, good).format(), end="")

# the same check for a tree written in the text format
tree = parse_decomposition("treedecomp 2\nnode 0 - ; a ;\nnode 1 0 ; b c ;\n")
print(verify_tree_decomposition(cycle, tree).format(), end="")
fixed = parse_decomposition("treedecomp 2\nnode 0 - ; a ;\nnode 1 0 ; b c ; a\n")
print(verify_tree_decomposition(cycle, fixed).format(), end="")

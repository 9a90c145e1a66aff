"""General digraphs: widths one strong component at a time."""
from dicowidth import build_digraph, format_expr, strong_component_expression, strong_components, width_of_digraph

arcs = [
    ("a", "b"), ("b", "a"), ("b", "c"),
    ("c", "d"), ("d", "e"), ("e", "c"),          # a directed triangle
    ("e", "f"), ("f", "g"), ("g", "f"), ("f", "h"), ("h", "f"), ("g", "h"), ("h", "g"),
]
g = build_digraph("abcdefgh", arcs)

cond = strong_components(g)
for comp in cond.components:
    print("component", " ".join(sorted(comp)))

# co-graph components use the formula, the triangle goes to the oracle
report = width_of_digraph(g)
for comp in report.components:
    print(sorted(comp.vertices), comp.method, "dpw", comp.dpw, "dtw", (comp.dtw_lower, comp.dtw_upper))
print("whole graph: dpw", report.dpw, "dtw in", (report.dtw_lower, report.dtw_upper))

# the digraph rewritten as a chain of directed unions
print(format_expr(strong_component_expression(g)))

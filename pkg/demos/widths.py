"""Widths of directed co-graphs from their expressions."""
from dicowidth import annotate, binarize, dpw_exact, evaluate, parse_expr

# two bioriented cliques side by side: the larger one decides the width
e = binarize(parse_expr("(a * b) + (c * d * e)"))
ann = annotate(e)
print("dpw =", ann.root_dpw, " dtw =", ann.root_dtw)

# every operator on its own
for text in ["a / b / c", "a + b + c", "a * b * c", "c * (l1 + l2 + l3 + l4)"]:
    w = annotate(binarize(parse_expr(text)))
    print(f"{text:28s} dpw={w.root_dpw}")

# series nodes pick the cheaper side; the choice is kept for the builders
ann = annotate(binarize(parse_expr("(x + y + z) * (p / q)")))
print("side at root:", ann.side[ann.root])

# the formula agrees with brute force over vertex orderings
g = evaluate(e)
print("oracle:", dpw_exact(g).width, "ordering:", " ".join(dpw_exact(g).ordering))

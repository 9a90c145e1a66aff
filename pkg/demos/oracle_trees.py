"""Exact search on graphs that are not co-graphs: bioriented binary trees."""
import math

from dicowidth import Digraph, dpw_exact, dtw_bracket, recognize_di_cograph


def binary_tree(h):
    n = 2 ** (h + 1) - 1
    names = [f"t{i:02d}" for i in range(n)]
    arcs = [(names[(i - 1) // 2], names[i]) for i in range(1, n)]
    return Digraph(names, arcs + [(v, u) for u, v in arcs])


for h in range(1, 5):
    g = binary_tree(h)
    result = dpw_exact(g, cap=len(g))
    bracket = dtw_bracket(g, cap=len(g), clique_cap=len(g))
    kind = "co-graph" if recognize_di_cograph(g) else "not a co-graph"
    print(f"h={h} n={len(g):2d} {kind:15s} dpw={result.width} (ceil(h/2)={math.ceil(h / 2)}) "
          f"dtw in [{bracket.lower}, {bracket.upper}]")

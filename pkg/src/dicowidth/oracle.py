"""Exact directed path-width for small digraphs, and dtw bracketing.

The search works on the directed vertex separation formulation: for a vertex
ordering, a placed vertex is a *separator* while some in-neighbour is still
unplaced, and the cost of the ordering is the largest separator count over
all prefixes.  The minimum cost equals the directed path-width.  The cost of
a prefix depends only on the prefix *set*, so prefixes are memoised as
bitmasks.
"""
from __future__ import annotations

from dataclasses import dataclass

from .decomposition import PathDecomposition
from .digraph import (
    CapExceeded,
    Digraph,
    UndirectedGraph,
    complete_biorientation,
    induced_subdigraph,
    largest_bioriented_clique,
    strong_components,
)

DEFAULT_CAP = 12


@dataclass(frozen=True)
class OracleResult:
    width: int
    ordering: tuple[str, ...]
    decomposition: PathDecomposition

    def __int__(self) -> int:
        return self.width


class _Search:
    def __init__(self, g: Digraph):
        self.labels = g.ordered_vertices()
        idx = {v: i for i, v in enumerate(self.labels)}
        self.n = len(self.labels)
        self.full = (1 << self.n) - 1
        self.inmask = [0] * self.n
        for u, v in g.arcs:
            self.inmask[idx[v]] |= 1 << idx[u]
        # failed[k] holds prefix sets with no completion of cost <= k
        self.failed: dict[int, set[int]] = {}

    def separators(self, placed: int) -> int:
        count = 0
        rest = ~placed
        m = placed
        while m:
            low = m & -m
            if self.inmask[low.bit_length() - 1] & rest:
                count += 1
            m ^= low
        return count

    def close(self, placed: int, order: list[int]) -> int:
        # a vertex whose in-neighbours are all placed never hurts when placed next
        changed = True
        while changed:
            changed = False
            m = self.full & ~placed
            while m:
                low = m & -m
                i = low.bit_length() - 1
                if not self.inmask[i] & ~placed:
                    placed |= low
                    order.append(i)
                    changed = True
                m ^= low
        return placed

    def feasible(self, k: int, heuristic: bool) -> list[int] | None:
        failed = self.failed.setdefault(k, set())
        order: list[int] = []
        start = self.close(0, order)

        def dfs(placed: int) -> bool:
            if placed == self.full:
                return True
            if placed in failed:
                return False
            options = []
            m = self.full & ~placed
            while m:
                low = m & -m
                i = low.bit_length() - 1
                s = self.separators(placed | low)
                if s <= k:
                    options.append((s if heuristic else 0, i))
                m ^= low
            options.sort()
            for _, i in options:
                mark = len(order)
                order.append(i)
                nxt = self.close(placed | (1 << i), order)
                if dfs(nxt):
                    return True
                del order[mark:]
            failed.add(placed)
            return False

        return order if dfs(start) else None


def _bags(g: Digraph, ordering: list[str]) -> PathDecomposition:
    placed: set[str] = set()
    bags = []
    for v in ordering:
        sep = {u for u in placed if g.in_neighbors(u) - placed}
        bags.append(frozenset(sep | {v}))
        placed.add(v)
    return PathDecomposition(tuple(bags))


def dpw_exact(g: Digraph, cap: int = DEFAULT_CAP, lower: int = 0) -> OracleResult:
    """Directed path-width of ``g`` with an optimal path-decomposition.

    ``lower`` may pass a known lower bound to skip hopeless widths.  The
    certificate is made canonical by redoing the search at the optimal width
    with candidates tried in lexicographic order.
    """
    if len(g) > cap:
        raise CapExceeded(f"dpw_exact: {len(g)} vertices exceeds cap {cap}")
    if len(g) == 0:
        return OracleResult(-1, (), PathDecomposition(()))
    search = _Search(g)
    k = max(lower, 0)
    while search.feasible(k, heuristic=True) is None:
        k += 1
    order = search.feasible(k, heuristic=False)
    ordering = [search.labels[i] for i in order]
    return OracleResult(k, tuple(ordering), _bags(g, ordering))


def pw_exact_undirected(g: UndirectedGraph, cap: int = DEFAULT_CAP) -> int:
    """Path-width of an undirected graph, via its complete biorientation."""
    return dpw_exact(complete_biorientation(g), cap).width


@dataclass(frozen=True)
class DtwBracket:
    lower: int
    upper: int
    reason: str

    @property
    def exact(self) -> bool:
        return self.lower == self.upper


def dtw_bracket(
    g: Digraph,
    expr=None,
    cap: int = DEFAULT_CAP,
    clique_cap: int = 20,
    recognizer_cap: int = 512,
) -> DtwBracket:
    """Bounds on the directed tree-width of ``g``.

    The upper bound is the exact directed path-width.  The lower bound is the
    bioriented clique bound, raised per strong component to the exact value
    wherever the component is a directed co-graph (where the two widths
    coincide).  Passing an (extended) co-graph expression for ``g`` collapses
    the bracket directly.
    """
    from .expr import evaluate
    from .expr.recognize import NotACograph, recognize_di_cograph

    upper = dpw_exact(g, cap).width
    if expr is not None:
        if evaluate(expr) != g:
            raise ValueError("expression does not evaluate to the given digraph")
        return DtwBracket(upper, upper, "expression")
    lower = len(largest_bioriented_clique(g, clique_cap)) - 1 if len(g) else -1
    reason = "clique"
    exact_parts = 0
    cond = strong_components(g)
    for comp in cond.components:
        sub = induced_subdigraph(g, comp)
        if len(sub) <= recognizer_cap and not isinstance(recognize_di_cograph(sub, recognizer_cap), NotACograph):
            exact_parts += 1
            lower = max(lower, dpw_exact(sub, cap).width)
        else:
            lower = max(lower, len(largest_bioriented_clique(sub, clique_cap)) - 1)
    if exact_parts == len(cond):
        reason = "cograph components"
    return DtwBracket(lower, upper, reason)

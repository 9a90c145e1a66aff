"""Axiom checkers for directed path- and arboreal tree-decompositions."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

from .decomposition import ArborealDecomposition, DecompositionFormatError, PathDecomposition
from .digraph import Digraph


@dataclass(frozen=True)
class Verdict:
    """Outcome of a verification.  ``width`` is reported even when invalid."""

    valid: bool
    width: int
    violations: tuple[tuple[str, tuple[str, ...]], ...] = field(default_factory=tuple)

    def __bool__(self) -> bool:
        return self.valid

    def format(self) -> str:
        head = f"{'valid' if self.valid else 'invalid'} width={self.width}"
        lines = [head]
        for axiom, witness in self.violations:
            kind = "walk" if axiom == "dtw-2" else "witness"
            lines.append(f"{axiom} {kind}: {' '.join(witness)}")
        return "\n".join(lines) + "\n"


def _verdict(width: int, violations: list[tuple[str, tuple[str, ...]]]) -> Verdict:
    violations.sort()
    return Verdict(not violations, width, tuple(violations))


def _check_labels(g: Digraph, sets: Iterable[frozenset[str]]) -> None:
    unknown = set().union(*sets) - g.vertices
    if unknown:
        raise DecompositionFormatError(f"decomposition mentions unknown vertices {sorted(unknown)!r}")


def verify_path_decomposition(g: Digraph, p: PathDecomposition) -> Verdict:
    _check_labels(g, p.bags)
    violations: list[tuple[str, tuple[str, ...]]] = []
    first: dict[str, int] = {}
    last: dict[str, int] = {}
    for i, bag in enumerate(p.bags):
        for v in bag:
            first.setdefault(v, i)
            last[v] = i
    for v in g.ordered_vertices():
        if v not in first:
            violations.append(("dpw-1", (v,)))
    for u, v in g.arcs:
        # u must occur no later than the last bag holding v
        if u not in first or v not in last or first[u] > last[v]:
            violations.append(("dpw-2", (u, v)))
    for v, lo in first.items():
        if any(v not in p.bags[i] for i in range(lo, last[v] + 1)):
            violations.append(("dpw-3", (v,)))
    width = p.width if g.vertices else -1
    return _verdict(width, violations)


def is_z_normal(
    g: Digraph, s: Iterable[str], z: Iterable[str], disjoint: bool = False
) -> tuple[bool, tuple[str, ...] | None]:
    """Whether ``s`` is ``z``-normal in ``g``, with a witness walk if not.

    ``s`` is ``z``-normal when no directed walk in ``g - z`` starts and ends in
    ``s`` while visiting a vertex outside ``s | z``.  ``s`` and ``z`` may
    overlap unless ``disjoint`` is set, which enforces the stricter variant
    with ``s`` and ``z`` disjoint.
    """
    s, z = frozenset(s), frozenset(z)
    if disjoint and s & z:
        raise ValueError("disjoint variant requires S and Z to be disjoint")
    inside = s - z
    parent: dict[str, str] = {}
    queue: deque[str] = deque()
    for u in sorted(inside):
        for w in sorted(g.out_neighbors(u)):
            if w not in inside and w not in z and w not in parent:
                parent[w] = u
                queue.append(w)
    while queue:
        r = queue.popleft()
        back = sorted(g.out_neighbors(r) & inside)
        if back:
            walk = [back[0], r]
            while walk[-1] in parent:
                walk.append(parent[walk[-1]])
            return False, tuple(reversed(walk))
        for w in sorted(g.out_neighbors(r)):
            if w not in inside and w not in z and w not in parent:
                parent[w] = r
                queue.append(w)
    return True, None


def _check_tree(d: ArborealDecomposition) -> list[list[int]]:
    roots = d.roots
    if len(roots) != 1:
        raise DecompositionFormatError(f"tree must have exactly one root, found {len(roots)}")
    kids = d.children()
    seen = {roots[0]}
    stack = [roots[0]]
    while stack:
        r = stack.pop()
        for c in kids[r]:
            seen.add(c)
            stack.append(c)
    if len(seen) != len(d):
        raise DecompositionFormatError("tree contains a cycle or unreachable nodes")
    return kids


def subtree_unions(d: ArborealDecomposition) -> list[frozenset[str]]:
    """``⋃ W_r`` over the subtree below every node."""
    kids = _check_tree(d)
    order = []
    stack = [d.root]
    while stack:
        r = stack.pop()
        order.append(r)
        stack.extend(kids[r])
    below: list[frozenset[str]] = [frozenset()] * len(d)
    for r in reversed(order):
        below[r] = d.w[r].union(*(below[c] for c in kids[r]))
    return below


def verify_tree_decomposition(
    g: Digraph, d: ArborealDecomposition, disjoint_normality: bool = False
) -> Verdict:
    """Check (dtw-1) and (dtw-2).

    With ``disjoint_normality`` each subtree set ``S`` is tested against the
    guard ``X - S`` under the disjoint normality variant instead.
    """
    _check_labels(g, d.w)
    _check_labels(g, d.x)
    below = subtree_unions(d)
    violations: list[tuple[str, tuple[str, ...]]] = []
    seen: dict[str, int] = {}
    for r, part in enumerate(d.w):
        if not part:
            violations.append(("dtw-1", (f"node{r}",)))
        for v in part:
            if v in seen:
                violations.append(("dtw-1", (v,)))
            seen[v] = r
    for v in g.ordered_vertices():
        if v not in seen:
            violations.append(("dtw-1", (v,)))
    for _, child in d.arcs():
        guard = d.x[child]
        if disjoint_normality:
            guard = guard - below[child]
        ok, walk = is_z_normal(g, below[child], guard)
        if not ok:
            violations.append(("dtw-2", walk))
    width = d.width if g.vertices else -1
    return _verdict(width, violations)


def verify(g: Digraph, dec: PathDecomposition | ArborealDecomposition) -> Verdict:
    if isinstance(dec, PathDecomposition):
        return verify_path_decomposition(g, dec)
    return verify_tree_decomposition(g, dec)

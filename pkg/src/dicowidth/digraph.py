"""Simple loop-free digraphs and the structural operations used by the width code.

Vertices are opaque string labels.  A :class:`Digraph` is immutable once built;
adjacency is precomputed so that arc membership is O(1) and per-vertex
out/in-neighbourhoods are available directly.
"""
from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass
from typing import Iterable


class GraphError(ValueError):
    """Raised for malformed graph input (self-loops, unknown labels, ...)."""


class CapExceeded(RuntimeError):
    """Raised when an exponential routine is asked to run above its size cap."""


class Digraph:
    """A finite simple digraph without self-loops.

    Build through :func:`build_digraph` when the input comes from a user; the
    constructor performs the same checks but accepts arbitrary iterables.
    """

    __slots__ = ("_vertices", "_arcs", "_out", "_in", "_order")

    def __init__(self, vertices: Iterable[str], arcs: Iterable[tuple[str, str]] = ()):
        vs = frozenset(vertices)
        es = frozenset((u, v) for u, v in arcs)
        out: dict[str, set[str]] = {v: set() for v in vs}
        inn: dict[str, set[str]] = {v: set() for v in vs}
        for u, v in es:
            if u == v:
                raise GraphError(f"self-loop on {u!r}")
            if u not in out or v not in out:
                raise GraphError(f"arc ({u!r}, {v!r}) has an endpoint outside the vertex set")
            out[u].add(v)
            inn[v].add(u)
        self._vertices = vs
        self._arcs = es
        self._out = {v: frozenset(s) for v, s in out.items()}
        self._in = {v: frozenset(s) for v, s in inn.items()}
        self._order = tuple(sorted(vs))

    @property
    def vertices(self) -> frozenset[str]:
        return self._vertices

    @property
    def arcs(self) -> frozenset[tuple[str, str]]:
        return self._arcs

    def ordered_vertices(self) -> tuple[str, ...]:
        """Vertices in lexicographic order (the canonical tie-break order)."""
        return self._order

    def out_neighbors(self, v: str) -> frozenset[str]:
        return self._out[v]

    def in_neighbors(self, v: str) -> frozenset[str]:
        return self._in[v]

    def has_arc(self, u: str, v: str) -> bool:
        return (u, v) in self._arcs

    def __len__(self) -> int:
        return len(self._vertices)

    def __contains__(self, v: object) -> bool:
        return v in self._vertices

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self._vertices == other._vertices and self._arcs == other._arcs

    def __hash__(self) -> int:
        return hash((self._vertices, self._arcs))

    def __repr__(self) -> str:
        arcs = sorted(self._arcs)
        return f"Digraph(vertices={list(self._order)!r}, arcs={arcs!r})"


@dataclass(frozen=True)
class UndirectedGraph:
    vertices: frozenset[str]
    edges: frozenset[frozenset[str]]

    def __post_init__(self):
        for e in self.edges:
            if len(e) != 2:
                raise GraphError(f"edge {set(e)!r} is a loop or malformed")
            if not e <= self.vertices:
                raise GraphError(f"edge {set(e)!r} has an endpoint outside the vertex set")

    @classmethod
    def from_pairs(cls, vertices: Iterable[str], edges: Iterable[tuple[str, str]]) -> "UndirectedGraph":
        return cls(frozenset(vertices), frozenset(frozenset(e) for e in edges))

    def neighbors(self, v: str) -> frozenset[str]:
        return frozenset(w for e in self.edges if v in e for w in e if w != v)


@dataclass(frozen=True)
class Condensation:
    """Strong components in a deterministic topological order.

    ``component_arcs`` holds index pairs ``(i, j)``; every pair has ``i < j``.
    """

    components: tuple[frozenset[str], ...]
    component_arcs: frozenset[tuple[int, int]]

    def component_of(self) -> dict[str, int]:
        return {v: i for i, comp in enumerate(self.components) for v in comp}

    def __len__(self) -> int:
        return len(self.components)


def build_digraph(vertex_list: Iterable[str], arc_list: Iterable[tuple[str, str]]) -> Digraph:
    """Build a digraph from user input, rejecting duplicate labels."""
    labels = list(vertex_list)
    seen: set[str] = set()
    for v in labels:
        if v in seen:
            raise GraphError(f"duplicate vertex label {v!r}")
        seen.add(v)
    return Digraph(labels, arc_list)


def induced_subdigraph(g: Digraph, s: Iterable[str]) -> Digraph:
    keep = frozenset(s)
    if not keep <= g.vertices:
        raise GraphError(f"not a subset of the vertex set: {sorted(keep - g.vertices)!r}")
    return Digraph(keep, ((u, v) for u, v in g.arcs if u in keep and v in keep))


def underlying(g: Digraph) -> UndirectedGraph:
    return UndirectedGraph(g.vertices, frozenset(frozenset(a) for a in g.arcs))


def complete_biorientation(g: UndirectedGraph) -> Digraph:
    arcs = []
    for e in g.edges:
        u, v = tuple(e)
        arcs.append((u, v))
        arcs.append((v, u))
    return Digraph(g.vertices, arcs)


def complement_digraph(g: Digraph) -> Digraph:
    return Digraph(g.vertices, (
        (u, v) for u, v in itertools.permutations(g.ordered_vertices(), 2) if (u, v) not in g.arcs))


def converse_digraph(g: Digraph) -> Digraph:
    return Digraph(g.vertices, ((v, u) for u, v in g.arcs))


def disjoint_union(*graphs: Digraph) -> Digraph:
    vertices: set[str] = set()
    arcs: set[tuple[str, str]] = set()
    for h in graphs:
        if vertices & h.vertices:
            raise GraphError("operands are not vertex-disjoint")
        vertices |= h.vertices
        arcs |= h.arcs
    return Digraph(vertices, arcs)


def _tarjan(g: Digraph) -> list[list[str]]:
    # iterative Tarjan; components come out in reverse topological order
    index: dict[str, int] = {}
    low: dict[str, int] = {}
    on_stack: set[str] = set()
    stack: list[str] = []
    result: list[list[str]] = []
    counter = 0
    for root in g.ordered_vertices():
        if root in index:
            continue
        work = [(root, iter(sorted(g.out_neighbors(root))))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(sorted(g.out_neighbors(w)))))
                    advanced = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                result.append(comp)
    return result


def strong_components(g: Digraph) -> Condensation:
    """Strong components ordered topologically.

    Among components that are ready at the same time, the one containing the
    lexicographically smallest vertex comes first.
    """
    raw = [frozenset(c) for c in _tarjan(g)]
    comp_of = {v: i for i, c in enumerate(raw) for v in c}
    succ: dict[int, set[int]] = {i: set() for i in range(len(raw))}
    indeg = [0] * len(raw)
    for u, v in g.arcs:
        a, b = comp_of[u], comp_of[v]
        if a != b and b not in succ[a]:
            succ[a].add(b)
            indeg[b] += 1
    heap = [(min(c), i) for i, c in enumerate(raw) if indeg[i] == 0]
    heapq.heapify(heap)
    position: dict[int, int] = {}
    while heap:
        _, i = heapq.heappop(heap)
        position[i] = len(position)
        for j in succ[i]:
            indeg[j] -= 1
            if indeg[j] == 0:
                heapq.heappush(heap, (min(raw[j]), j))
    components = [frozenset()] * len(raw)
    for i, p in position.items():
        components[p] = raw[i]
    arcs = frozenset((position[a], position[b]) for a in succ for b in succ[a])
    return Condensation(tuple(components), arcs)


def mutual_neighbors(g: Digraph, v: str) -> frozenset[str]:
    """Vertices joined to ``v`` by arcs in both directions."""
    return g.out_neighbors(v) & g.in_neighbors(v)


def is_bioriented_clique(g: Digraph, s: Iterable[str]) -> bool:
    members = list(s)
    return all(g.has_arc(u, v) for u, v in itertools.permutations(members, 2))


def largest_bioriented_clique(g: Digraph, cap: int = 20) -> frozenset[str]:
    """A maximum set of vertices that are pairwise joined in both directions.

    Branch and bound over the graph of mutually adjacent pairs.  Returns the
    empty set for the empty digraph.
    """
    if len(g) > cap:
        raise CapExceeded(f"largest_bioriented_clique: {len(g)} vertices exceeds cap {cap}")
    order = g.ordered_vertices()
    idx = {v: i for i, v in enumerate(order)}
    adj = [0] * len(order)
    for v in order:
        for w in mutual_neighbors(g, v):
            adj[idx[v]] |= 1 << idx[w]

    best = 0
    best_size = 0

    def expand(clique: int, size: int, cand: int) -> None:
        nonlocal best, best_size
        if cand == 0:
            if size > best_size:
                best, best_size = clique, size
            return
        while cand:
            if size + cand.bit_count() <= best_size:
                return
            low = cand & -cand
            i = low.bit_length() - 1
            expand(clique | low, size + 1, cand & adj[i])
            cand &= ~low

    expand(0, 0, (1 << len(order)) - 1)
    return frozenset(order[i] for i in range(len(order)) if best >> i & 1)


# -- edge-list text format ---------------------------------------------------

def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_edge_list(text: str) -> Digraph:
    """Parse ``n m`` / n labels / m ``u v`` lines; ``#`` starts a comment."""
    lines = list(_content_lines(text))
    if not lines:
        raise GraphError("empty edge list")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise GraphError(f"line {lineno}: expected header 'n m', got {header!r}")
    n, m = int(parts[0]), int(parts[1])
    body = lines[1:]
    if len(body) != n + m:
        raise GraphError(f"expected {n} vertex lines and {m} arc lines, found {len(body)} lines")
    labels = []
    for lineno, line in body[:n]:
        if len(line.split()) != 1:
            raise GraphError(f"line {lineno}: vertex label must be a single token")
        labels.append(line)
    arcs = []
    for lineno, line in body[n:]:
        toks = line.split()
        if len(toks) != 2:
            raise GraphError(f"line {lineno}: expected 'u v', got {line!r}")
        arcs.append((toks[0], toks[1]))
    return build_digraph(labels, arcs)


def format_edge_list(g: Digraph) -> str:
    arcs = sorted(g.arcs)
    out = [f"{len(g)} {len(arcs)}"]
    out.extend(g.ordered_vertices())
    out.extend(f"{u} {v}" for u, v in arcs)
    return "\n".join(out) + "\n"


def digraph_to_dot(g: Digraph, name: str = "G") -> str:
    out = [f"digraph {name} {{"]
    out.extend(f'  "{v}";' for v in g.ordered_vertices())
    out.extend(f'  "{u}" -> "{v}";' for u, v in sorted(g.arcs))
    out.append("}")
    return "\n".join(out) + "\n"

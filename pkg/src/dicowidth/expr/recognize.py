"""Recognition of directed co-graphs and strong-component decomposition."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from ..digraph import CapExceeded, Digraph, induced_subdigraph, strong_components
from .ast import Block, Expr, ExprError, Leaf, Node, Op, canonical, evaluate


@dataclass(frozen=True)
class NotACograph:
    """Failure witness: an induced subdigraph with at least two vertices that
    has no top-level union, series or order split."""

    witness: frozenset[str]

    def __bool__(self) -> bool:
        return False


def _components(vertices: list[str], adjacent) -> list[list[str]]:
    seen: set[str] = set()
    comps = []
    for v in vertices:
        if v in seen:
            continue
        seen.add(v)
        comp, stack = [v], [v]
        while stack:
            u = stack.pop()
            for w in vertices:
                if w not in seen and adjacent(u, w):
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def _split(g: Digraph, vs: list[str]) -> tuple[Op, list[list[str]]] | None:
    has = g.has_arc
    parts = _components(vs, lambda u, w: has(u, w) or has(w, u))
    if len(parts) > 1:
        return Op.UNION, parts
    parts = _components(vs, lambda u, w: not (has(u, w) and has(w, u)))
    if len(parts) > 1:
        return Op.SERIES, parts
    # an order cut (A, B) is a prefix of every topological order of the
    # strong components, so checking the prefixes of one order finds them all
    comps = strong_components(induced_subdigraph(g, vs)).components
    if len(comps) < 2:
        return None
    pos = {v: i for i, c in enumerate(comps) for v in c}
    crossing = [0] * (len(comps) + 1)
    for u in vs:
        for w in g.out_neighbors(u):
            if w in pos and pos[w] != pos[u]:
                crossing[pos[u]] += 1
                crossing[pos[w]] -= 1
    parts: list[list[str]] = []
    current: list[str] = []
    before = 0
    running = 0
    for i, comp in enumerate(comps[:-1]):
        current.extend(comp)
        before += len(comp)
        running += crossing[i]
        if running == before * (len(vs) - before):
            parts.append(sorted(current))
            current = []
    if not parts:
        return None
    current.extend(comps[-1])
    parts.append(sorted(current))
    return Op.ORDER, parts


def recognize_di_cograph(g: Digraph, cap: int = 512) -> Expr | NotACograph:
    """Return a di-co-tree for ``g`` or a :class:`NotACograph` witness.

    Tries union, then series, then order splits at every level; the result is
    canonicalised so that commutative operands are sorted by smallest label.
    """
    if len(g) > cap:
        raise CapExceeded(f"recognize_di_cograph: {len(g)} vertices exceeds cap {cap}")
    if len(g) == 0:
        raise ExprError("the empty digraph has no expression")
    built: dict[tuple[str, ...], Expr] = {}
    # explicit stack: (vertex list, expanded?)
    stack: list[tuple[tuple[str, ...], bool]] = [(tuple(g.ordered_vertices()), False)]
    plan: dict[tuple[str, ...], tuple[Op, list[tuple[str, ...]]]] = {}
    while stack:
        vs, expanded = stack.pop()
        if len(vs) == 1:
            built[vs] = Leaf(vs[0])
            continue
        if expanded:
            op, parts = plan[vs]
            built[vs] = Node(op, tuple(built[p] for p in parts))
            continue
        split = _split(g, list(vs))
        if split is None:
            return NotACograph(frozenset(vs))
        op, parts = split
        plan[vs] = (op, [tuple(p) for p in parts])
        stack.append((vs, True))
        stack.extend((tuple(p), False) for p in parts)
    return canonical(built[tuple(g.ordered_vertices())])


def is_di_cograph(g: Digraph, cap: int = 512) -> bool:
    return not isinstance(recognize_di_cograph(g, cap), NotACograph)


def strong_component_expression(
    g: Digraph,
    component_exprs: Mapping[frozenset[str], Expr] | None = None,
    recognize: bool = True,
    cap: int = 512,
) -> Expr:
    """Write ``g`` as a directed union of its strong components.

    The components appear in topological order as a right-nested chain of
    directed unions whose cross arcs are all arcs of ``g`` between different
    components.  Each component is represented by the expression supplied in
    ``component_exprs`` (checked by evaluation), otherwise by a recognised
    di-co-tree when ``recognize`` is set, otherwise by an opaque block.
    """
    cond = strong_components(g)
    component_exprs = component_exprs or {}
    parts: list[Expr] = []
    for comp in cond.components:
        sub = induced_subdigraph(g, comp)
        given = component_exprs.get(comp)
        if given is not None:
            if evaluate(given) != sub:
                raise ExprError(f"expression for component {sorted(comp)!r} does not evaluate to it")
            parts.append(given)
            continue
        if len(comp) == 1:
            parts.append(Leaf(next(iter(comp))))
            continue
        found = recognize_di_cograph(sub, cap) if recognize and len(sub) <= cap else None
        parts.append(found if isinstance(found, (Leaf, Node)) else Block(sub))
    acc = parts[-1]
    tail = set(cond.components[-1])
    for i in range(len(parts) - 2, -1, -1):
        head = cond.components[i]
        arcs = frozenset((u, v) for u in head for v in g.out_neighbors(u) if v in tail)
        acc = Node(Op.DIRECTED, (parts[i], acc), arcs)
        tail |= head
    return acc

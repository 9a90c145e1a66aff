"""Optimal decompositions from expressions, plus two certificate transforms.

Builders follow the composition formulas: union-like nodes concatenate the
operands' certificates, series nodes take the cheaper operand's certificate
and add the other operand's vertex set everywhere.  Every tree certificate
built here is a path (the right operand always hangs off the end of the
left one), which is what keeps the concatenation step valid.
"""
from __future__ import annotations

from .decomposition import ArborealDecomposition, DecompositionFormatError, PathDecomposition
from .digraph import Digraph
from .expr.ast import Expr, Leaf, Node, Op, leaf_sets, postorder
from .verify import verify_path_decomposition, verify_tree_decomposition
from .width import WidthAnnotation, annotate


def _collapse(bags: list[frozenset[str]]) -> list[frozenset[str]]:
    out: list[frozenset[str]] = []
    for b in bags:
        if b and (not out or out[-1] != b):
            out.append(b)
    return out


def build_path_decomposition(e: Expr, ann: WidthAnnotation | None = None) -> PathDecomposition:
    """Directed path-decomposition of width ``dpw(e)`` for a binary expression."""
    ann = ann if ann is not None else annotate(e)
    sets = leaf_sets(e)
    done: dict[Expr, list[frozenset[str]]] = {}
    for node in postorder(e):
        if isinstance(node, Leaf):
            done[node] = [frozenset((node.label,))]
            continue
        left, right = node.children
        if node.op is Op.SERIES:
            base, other = (left, right) if ann.side[node] == "left" else (right, left)
            extra = sets[other]
            done[node] = _collapse([b | extra for b in done.pop(base)])
            del done[other]
        else:
            done[node] = done.pop(left) + done.pop(right)
    return PathDecomposition(tuple(done[e]))


def build_tree_decomposition(e: Expr, ann: WidthAnnotation | None = None) -> ArborealDecomposition:
    """Arboreal decomposition of width ``dtw(e)``; the tree is a directed path."""
    ann = ann if ann is not None else annotate(e)
    sets = leaf_sets(e)
    # each partial certificate is a path: list of (W, X on the incoming arc)
    done: dict[Expr, list[tuple[frozenset[str], frozenset[str]]]] = {}
    empty: frozenset[str] = frozenset()
    for node in postorder(e):
        if isinstance(node, Leaf):
            done[node] = [(frozenset((node.label,)), empty)]
            continue
        left, right = node.children
        if node.op is Op.SERIES:
            base, other = (left, right) if ann.side[node] == "left" else (right, left)
            extra = sets[other]
            chain = done.pop(base)
            del done[other]
            # new root holds the other side; every arc below gains it as guard
            done[node] = [(extra, empty)] + [(w, x | extra) for w, x in chain]
        else:
            head = done.pop(left)
            tail = done.pop(right)
            tail[0] = (tail[0][0], empty)
            done[node] = head + tail
    chain = done[e]
    parent = tuple(None if i == 0 else i - 1 for i in range(len(chain)))
    w = tuple(part for part, _ in chain)
    x = tuple(empty if i == 0 else guard for i, (_, guard) in enumerate(chain))
    return ArborealDecomposition(parent, w, x)


def _require_valid_path(p: PathDecomposition, g: Digraph | None) -> None:
    if g is not None:
        verdict = verify_path_decomposition(g, p)
        if not verdict.valid:
            raise DecompositionFormatError(f"invalid path decomposition: {verdict.violations[:3]!r}")
        return
    first: dict[str, int] = {}
    for i, bag in enumerate(p.bags):
        for v in bag:
            if v in first and v not in p.bags[i - 1]:
                raise DecompositionFormatError(f"vertex {v!r} does not occupy an interval of bags")
            first.setdefault(v, i)


def path_to_tree_decomposition(p: PathDecomposition, g: Digraph | None = None) -> ArborealDecomposition:
    """Turn a directed path-decomposition into an arboreal one on a path.

    Node ``i`` receives the vertices first seen in bag ``i``; the arc from
    node ``i`` to node ``i+1`` is guarded by the intersection of the two bags.
    Bags that introduce no new vertex would give empty parts; such nodes are
    skipped and the guard of their outgoing arc is kept, which leaves every
    subtree set and guard unchanged.
    """
    _require_valid_path(p, g)
    bags = [b for b in p.bags if b]
    seen: set[str] = set()
    nodes: list[tuple[frozenset[str], frozenset[str]]] = []
    for i, bag in enumerate(bags):
        new = bag - seen
        seen |= bag
        guard = bag & bags[i - 1] if i else frozenset()
        if new:
            nodes.append((new, guard))
    parent = tuple(None if i == 0 else i - 1 for i in range(len(nodes)))
    return ArborealDecomposition(
        parent,
        tuple(w for w, _ in nodes),
        tuple(frozenset() if i == 0 else x for i, (_, x) in enumerate(nodes)),
    )


def normalize_singleton_bags(d: ArborealDecomposition, g: Digraph | None = None) -> ArborealDecomposition:
    """Split every node whose part has several vertices into a directed path.

    A node ``r`` with part ``{v1, ..., vk}`` (sorted) and incoming guard ``X``
    becomes ``r1 -> ... -> rk`` with parts ``{vj}``; the arc into ``r(j+1)`` is
    guarded by ``X | {v1, ..., vj}`` and the children of ``r`` hang off ``rk``.
    """
    if g is not None:
        verdict = verify_tree_decomposition(g, d)
        if not verdict.valid:
            raise DecompositionFormatError(f"invalid tree decomposition: {verdict.violations[:3]!r}")
    kids = d.children()
    parent: list[int | None] = []
    w: list[frozenset[str]] = []
    x: list[frozenset[str]] = []
    stack: list[tuple[int, int | None]] = [(d.root, None)]
    while stack:
        r, new_parent = stack.pop()
        guard = d.x[r] if d.parent[r] is not None else frozenset()
        members = sorted(d.w[r])
        prev = new_parent
        for j, v in enumerate(members):
            parent.append(prev)
            w.append(frozenset((v,)))
            x.append(guard if j == 0 else guard | frozenset(members[:j]))
            if prev is None:
                x[-1] = frozenset()
            prev = len(parent) - 1
        for c in reversed(kids[r]):
            stack.append((c, prev))
    return ArborealDecomposition(tuple(parent), tuple(w), tuple(x))

"""Expression trees for directed co-graphs and extended directed co-graphs."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterator, Union

from ..digraph import Digraph


class Op(enum.Enum):
    UNION = "+"       # disjoint union
    SERIES = "*"      # all arcs in both directions between operands
    ORDER = "/"       # all arcs from earlier to later operands
    DIRECTED = "du"   # directed union: explicit forward cross arcs

    @property
    def commutative(self) -> bool:
        return self in (Op.UNION, Op.SERIES)


class ExprError(ValueError):
    pass


# eq=False: nodes hash by identity so per-node annotation maps stay O(1)
@dataclass(frozen=True, eq=False)
class Leaf:
    label: str

    def __repr__(self) -> str:
        return f"Leaf({self.label!r})"


@dataclass(frozen=True, eq=False)
class Node:
    op: Op
    children: tuple["Expr", ...]
    cross_arcs: frozenset[tuple[str, str]] = field(default_factory=frozenset)

    def __post_init__(self):
        if len(self.children) < 2:
            raise ExprError(f"{self.op.name} node needs at least two operands")
        if self.cross_arcs and self.op is not Op.DIRECTED:
            raise ExprError("only directed-union nodes carry cross arcs")

    def __repr__(self) -> str:
        extra = f", cross_arcs={sorted(self.cross_arcs)!r}" if self.cross_arcs else ""
        return f"Node({self.op.name}, {list(self.children)!r}{extra})"


@dataclass(frozen=True, eq=False)
class Block:
    """An opaque digraph embedded as an operand.

    Used for strong components that are not directed co-graphs; width
    formulas do not apply to it.
    """

    graph: Digraph

    def __repr__(self) -> str:
        return f"Block({self.graph!r})"


Expr = Union[Leaf, Node, Block]


def postorder(e: Expr) -> Iterator[Expr]:
    """Yield every node after all of its children, without recursion."""
    stack: list[tuple[Expr, bool]] = [(e, False)]
    while stack:
        node, expanded = stack.pop()
        if expanded or not isinstance(node, Node):
            yield node
            continue
        stack.append((node, True))
        for child in reversed(node.children):
            stack.append((child, False))


def leaf_sets(e: Expr) -> dict[Expr, frozenset[str]]:
    """Vertex set below every node."""
    sets: dict[Expr, frozenset[str]] = {}
    for node in postorder(e):
        if isinstance(node, Leaf):
            sets[node] = frozenset((node.label,))
        elif isinstance(node, Block):
            sets[node] = node.graph.vertices
        else:
            sets[node] = frozenset().union(*(sets[c] for c in node.children))
    return sets


def labels(e: Expr) -> frozenset[str]:
    return leaf_sets(e)[e]


def subtree_sizes(e: Expr) -> dict[Expr, int]:
    sizes: dict[Expr, int] = {}
    for node in postorder(e):
        if isinstance(node, Leaf):
            sizes[node] = 1
        elif isinstance(node, Block):
            sizes[node] = len(node.graph)
        else:
            sizes[node] = sum(sizes[c] for c in node.children)
    return sizes


def min_label(e: Expr) -> str:
    return min(labels(e))


def is_binary(e: Expr) -> bool:
    return all(len(n.children) == 2 for n in postorder(e) if isinstance(n, Node))


def ops_used(e: Expr) -> frozenset[Op]:
    return frozenset(n.op for n in postorder(e) if isinstance(n, Node))


def is_di_co_tree(e: Expr) -> bool:
    return Op.DIRECTED not in ops_used(e) and not has_blocks(e)


def is_ex_di_co_tree(e: Expr) -> bool:
    # union and order are accepted as the empty / full directed union
    return not has_blocks(e)


def has_blocks(e: Expr) -> bool:
    return any(isinstance(n, Block) for n in postorder(e))


def validate(e: Expr) -> None:
    """Check that leaf labels are distinct and every cross arc points forward."""
    sets: dict[Expr, frozenset[str]] = {}
    for node in postorder(e):
        if isinstance(node, Leaf):
            sets[node] = frozenset((node.label,))
            continue
        if isinstance(node, Block):
            sets[node] = node.graph.vertices
            continue
        child_sets = [sets[c] for c in node.children]
        merged = frozenset().union(*child_sets)
        total = sum(len(s) for s in child_sets)
        if total != len(merged):
            dup = sorted(_duplicates(child_sets))
            raise ExprError(f"duplicate leaf label(s) {dup!r}")
        if node.cross_arcs:
            position = {v: i for i, s in enumerate(child_sets) for v in s}
            for u, v in sorted(node.cross_arcs):
                if u not in position or v not in position:
                    raise ExprError(f"cross arc {u}->{v} references a label outside this directed union")
                if position[u] >= position[v]:
                    raise ExprError(f"cross arc {u}->{v} does not point from an earlier to a later operand")
        sets[node] = merged


def _duplicates(sets):
    seen: set[str] = set()
    dup: set[str] = set()
    for s in sets:
        dup |= seen & s
        seen |= s
    return dup


def evaluate(e: Expr) -> Digraph:
    """The digraph defined by an expression."""
    sets: dict[Expr, frozenset[str]] = {}
    arcs: set[tuple[str, str]] = set()
    for node in postorder(e):
        if isinstance(node, Leaf):
            sets[node] = frozenset((node.label,))
            continue
        if isinstance(node, Block):
            sets[node] = node.graph.vertices
            arcs |= node.graph.arcs
            continue
        child_sets = [sets[c] for c in node.children]
        if node.op is Op.SERIES:
            for i, a in enumerate(child_sets):
                for b in child_sets[i + 1:]:
                    arcs.update((u, v) for u in a for v in b)
                    arcs.update((v, u) for u in a for v in b)
        elif node.op is Op.ORDER:
            for i, a in enumerate(child_sets):
                for b in child_sets[i + 1:]:
                    arcs.update((u, v) for u in a for v in b)
        elif node.op is Op.DIRECTED:
            arcs |= node.cross_arcs
        sets[node] = frozenset().union(*child_sets)
    return Digraph(sets[e], arcs)


def binarize(e: Expr) -> Expr:
    """Rewrite every k-ary node as a left-nested chain of binary nodes.

    Cross arcs of a directed union move to the binary node joining the
    operand that holds the arc's head with everything to its left.
    """
    if is_binary(e):
        return e
    sets = leaf_sets(e)
    done: dict[Expr, Expr] = {}
    for node in postorder(e):
        if not isinstance(node, Node):
            done[node] = node
            continue
        kids = [done[c] for c in node.children]
        if len(kids) == 2:
            done[node] = Node(node.op, tuple(kids), node.cross_arcs)
            continue
        head_pos = {}
        if node.cross_arcs:
            for i, c in enumerate(node.children):
                for v in sets[c]:
                    head_pos[v] = i
        acc = kids[0]
        for i in range(1, len(kids)):
            arcs = frozenset(a for a in node.cross_arcs if head_pos[a[1]] == i)
            acc = Node(node.op, (acc, kids[i]), arcs)
        done[node] = acc
    return done[e]


def canonical(e: Expr) -> Expr:
    """Sort operands of commutative nodes by their smallest label."""
    done: dict[Expr, Expr] = {}
    mins: dict[Expr, str] = {}
    for node in postorder(e):
        if isinstance(node, Leaf):
            done[node], mins[node] = node, node.label
        elif isinstance(node, Block):
            done[node], mins[node] = node, min(node.graph.vertices)
        else:
            kids = list(node.children)
            if node.op.commutative:
                kids.sort(key=lambda c: mins[c])
            done[node] = Node(node.op, tuple(done[c] for c in kids), node.cross_arcs)
            mins[node] = min(mins[c] for c in kids)
    return done[e]


def to_directed_unions(e: Expr) -> Expr:
    """Express union and order nodes as directed unions (empty / full cross arcs)."""
    sets = leaf_sets(e)
    done: dict[Expr, Expr] = {}
    for node in postorder(e):
        if not isinstance(node, Node) or node.op in (Op.SERIES, Op.DIRECTED):
            done[node] = node if not isinstance(node, Node) else Node(
                node.op, tuple(done[c] for c in node.children), node.cross_arcs)
            continue
        arcs: frozenset[tuple[str, str]] = frozenset()
        if node.op is Op.ORDER:
            child_sets = [sets[c] for c in node.children]
            arcs = frozenset(
                (u, v) for i, a in enumerate(child_sets) for b in child_sets[i + 1:] for u in a for v in b)
        done[node] = Node(Op.DIRECTED, tuple(done[c] for c in node.children), arcs)
    return done[e]

"""Directed path-width and tree-width of expressions by bottom-up composition.

For binary expressions the widths obey

* union, order and directed union: ``max(w(L), w(R))``
* series: ``min(w(L) + |R|, w(R) + |L|)``

with ``0`` at a single vertex, which gives a single linear pass over the tree.
Both widths follow the same recursion; they are computed separately and
checked against each other.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal

from .digraph import CapExceeded, Digraph, induced_subdigraph, largest_bioriented_clique, strong_components
from .expr.ast import Block, Expr, ExprError, Leaf, Op, binarize, postorder
from .expr.recognize import NotACograph, recognize_di_cograph
from .oracle import DEFAULT_CAP, dpw_exact


class NotBinaryError(ExprError):
    pass


Side = Literal["left", "right"]


@dataclass
class WidthAnnotation:
    """Per-node widths and leaf counts for one expression."""

    root: Expr
    dpw: dict[Expr, int] = field(default_factory=dict)
    dtw: dict[Expr, int] = field(default_factory=dict)
    size: dict[Expr, int] = field(default_factory=dict)
    # series nodes: which operand's decomposition gets the other side added
    side: dict[Expr, Side] = field(default_factory=dict)

    @property
    def root_dpw(self) -> int:
        return self.dpw[self.root]

    @property
    def root_dtw(self) -> int:
        return self.dtw[self.root]


def _fold(e: Expr, key: str, ann: WidthAnnotation) -> None:
    table: dict[Expr, int] = getattr(ann, key)
    size = ann.size
    fill_sizes = not size
    for node in postorder(e):
        if isinstance(node, Block):
            raise ExprError("an opaque block has no width formula; use the oracle")
        if isinstance(node, Leaf):
            table[node] = 0
            if fill_sizes:
                size[node] = 1
            continue
        if len(node.children) != 2:
            raise NotBinaryError(f"{node.op.name} node with {len(node.children)} operands; binarize first")
        left, right = node.children
        if fill_sizes:
            size[node] = size[left] + size[right]
        if node.op is Op.SERIES:
            via_left = table[left] + size[right]
            via_right = table[right] + size[left]
            table[node] = min(via_left, via_right)
            if key == "dpw":
                ann.side[node] = "left" if via_left <= via_right else "right"
        else:
            table[node] = max(table[left], table[right])


def compute_dpw(e: Expr) -> WidthAnnotation:
    """Directed path-width of every subexpression of a binary expression."""
    ann = WidthAnnotation(e)
    _fold(e, "dpw", ann)
    return ann


def compute_dtw(e: Expr, ann: WidthAnnotation | None = None) -> WidthAnnotation:
    """Directed tree-width of every subexpression; fills ``ann`` if given.

    When path-widths are present in the annotation the two must agree node by
    node, since the widths coincide on (extended) directed co-graphs.
    """
    ann = ann if ann is not None else WidthAnnotation(e)
    _fold(e, "dtw", ann)
    if ann.dpw:
        for node, w in ann.dtw.items():
            if ann.dpw[node] != w:
                raise AssertionError(f"dtw {w} differs from dpw {ann.dpw[node]} at {node!r}")
    return ann


def annotate(e: Expr) -> WidthAnnotation:
    """Both widths for a binary expression."""
    return compute_dtw(e, compute_dpw(e))


@dataclass(frozen=True)
class ComponentWidth:
    vertices: frozenset[str]
    dpw: int
    dtw_lower: int
    dtw_upper: int
    method: Literal["formula", "oracle"]
    expr: Expr | None = None

    @property
    def dtw_exact(self) -> bool:
        return self.dtw_lower == self.dtw_upper


@dataclass(frozen=True)
class GraphWidth:
    components: tuple[ComponentWidth, ...]

    @property
    def dpw(self) -> int:
        return max((c.dpw for c in self.components), default=-1)

    @property
    def dtw_lower(self) -> int:
        return max((c.dtw_lower for c in self.components), default=-1)

    @property
    def dtw_upper(self) -> int:
        return max((c.dtw_upper for c in self.components), default=-1)

    @property
    def dtw_exact(self) -> bool:
        return self.dtw_lower == self.dtw_upper


def width_of_digraph(
    g: Digraph,
    oracle_cap: int = DEFAULT_CAP,
    recognizer_cap: int = 512,
    clique_cap: int = 20,
) -> GraphWidth:
    """Widths of an arbitrary digraph, one strong component at a time.

    A component that is a directed co-graph gets exact values from the
    composition formulas.  Any other component is handed to the exact
    path-width oracle, and its tree-width is reported as the interval from
    the bioriented clique bound up to the path-width.
    """
    parts = []
    for comp in strong_components(g).components:
        sub = induced_subdigraph(g, comp)
        found = recognize_di_cograph(sub, recognizer_cap) if len(sub) <= recognizer_cap else None
        if found is not None and not isinstance(found, NotACograph):
            ann = annotate(binarize(found))
            parts.append(ComponentWidth(comp, ann.root_dpw, ann.root_dtw, ann.root_dtw, "formula", found))
            continue
        if len(sub) > oracle_cap:
            raise CapExceeded(
                f"component of {len(sub)} vertices is not a directed co-graph and exceeds the oracle cap {oracle_cap}")
        omega = len(largest_bioriented_clique(sub, max(clique_cap, len(sub))))
        dpw = dpw_exact(sub, oracle_cap, lower=omega - 1).width
        parts.append(ComponentWidth(comp, dpw, omega - 1, dpw, "oracle"))
    return GraphWidth(tuple(parts))

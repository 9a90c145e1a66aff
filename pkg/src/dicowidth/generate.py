"""Seeded random expressions and digraphs for corpora and tests."""
from __future__ import annotations

import random
from typing import Mapping

from .digraph import Digraph
from .expr.ast import Expr, Leaf, Node, Op, leaf_sets

# series nodes inflate width quickly, so they get half the weight of union
DEFAULT_MIX: Mapping[Op, int] = {Op.UNION: 2, Op.SERIES: 1, Op.ORDER: 1}
EXTENDED_MIX: Mapping[Op, int] = {Op.DIRECTED: 2, Op.SERIES: 1}


def random_expr(
    rng: random.Random,
    n: int,
    mix: Mapping[Op, int] = DEFAULT_MIX,
    max_arity: int = 3,
    arc_probability: float = 0.5,
    prefix: str = "v",
) -> Expr:
    """A random expression on ``n`` leaves labelled ``{prefix}0 .. {prefix}{n-1}``.

    Internal nodes get 2..``max_arity`` operands; directed unions get each
    forward cross arc independently with ``arc_probability``.
    """
    if n < 1:
        raise ValueError("need at least one leaf")
    ops = [op for op in mix if mix[op] > 0]
    weights = [mix[op] for op in ops]
    names = [f"{prefix}{i}" for i in range(n)]
    rng.shuffle(names)

    def grow(lo: int, hi: int) -> Expr:
        size = hi - lo
        if size == 1:
            return Leaf(names[lo])
        arity = rng.randint(2, min(max_arity, size))
        cuts = sorted(rng.sample(range(lo + 1, hi), arity - 1))
        bounds = [lo, *cuts, hi]
        kids = tuple(grow(a, b) for a, b in zip(bounds, bounds[1:]))
        op = rng.choices(ops, weights)[0]
        if op is not Op.DIRECTED:
            return Node(op, kids)
        sets = [sorted(names[a:b]) for a, b in zip(bounds, bounds[1:])]
        arcs = frozenset(
            (u, v)
            for i, a in enumerate(sets)
            for b in sets[i + 1:]
            for u in a
            for v in b
            if rng.random() < arc_probability
        )
        return Node(op, kids, arcs)

    return grow(0, n)


def random_corpus(
    seed: int,
    count: int,
    size_range: tuple[int, int],
    mix: Mapping[Op, int] = DEFAULT_MIX,
    max_arity: int = 3,
) -> list[Expr]:
    """``count`` expressions with leaf counts drawn uniformly from ``size_range``."""
    lo, hi = size_range
    if lo < 1 or hi < lo:
        raise ValueError(f"bad size range {size_range!r}")
    rng = random.Random(seed)
    return [random_expr(rng, rng.randint(lo, hi), mix, max_arity) for _ in range(count)]


def random_digraph(rng: random.Random, n: int, p: float = 0.3, prefix: str = "v") -> Digraph:
    names = [f"{prefix}{i}" for i in range(n)]
    arcs = [(u, v) for u in names for v in names if u != v and rng.random() < p]
    return Digraph(names, arcs)


def random_subset(rng: random.Random, items, min_size: int = 1) -> frozenset:
    items = sorted(items)
    k = rng.randint(min(min_size, len(items)), len(items))
    return frozenset(rng.sample(items, k))


def leaf_count(e: Expr) -> int:
    return len(leaf_sets(e)[e])

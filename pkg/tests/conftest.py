import itertools

import pytest
from hypothesis import strategies as st

from dicowidth.digraph import Digraph
from dicowidth.expr import Leaf, Node, Op, parse_expr
from dicowidth.generate import EXTENDED_MIX, random_corpus


def digraph(text: str) -> Digraph:
    """Digraph from compact text like ``"a b c | a>b b>c c<>a"``."""
    names, _, arcs = text.partition("|")
    vertices = names.split()
    out = []
    for tok in arcs.split():
        if "<>" in tok:
            u, v = tok.split("<>")
            out += [(u, v), (v, u)]
        else:
            u, v = tok.split(">")
            out.append((u, v))
    return Digraph(vertices, out)


def bioriented_clique(n: int) -> Digraph:
    names = [f"k{i}" for i in range(n)]
    return Digraph(names, itertools.permutations(names, 2))


def all_digraphs(n: int):
    names = [chr(ord("a") + i) for i in range(n)]
    pairs = list(itertools.permutations(names, 2))
    for mask in range(1 << len(pairs)):
        yield Digraph(names, (p for i, p in enumerate(pairs) if mask >> i & 1))


def star_expr(n: int):
    return parse_expr("c * (" + " + ".join(f"l{i}" for i in range(1, n + 1)) + ")") if n > 1 else parse_expr("c * l1")


@st.composite
def expressions(draw, max_leaves=8, ops=(Op.UNION, Op.SERIES, Op.ORDER, Op.DIRECTED)):
    n = draw(st.integers(1, max_leaves))
    names = draw(st.permutations([f"x{i}" for i in range(n)]))

    def grow(part):
        if len(part) == 1:
            return Leaf(part[0])
        arity = draw(st.integers(2, min(3, len(part))))
        cuts = sorted(draw(st.sets(st.integers(1, len(part) - 1), min_size=arity - 1, max_size=arity - 1)))
        bounds = [0, *cuts, len(part)]
        pieces = [part[a:b] for a, b in zip(bounds, bounds[1:])]
        kids = tuple(grow(p) for p in pieces)
        op = draw(st.sampled_from(ops))
        if op is not Op.DIRECTED:
            return Node(op, kids)
        candidates = [(u, v) for i, a in enumerate(pieces) for b in pieces[i + 1:] for u in a for v in b]
        arcs = draw(st.sets(st.sampled_from(candidates))) if candidates else set()
        return Node(op, kids, frozenset(arcs))

    return grow(list(names))


@pytest.fixture(scope="session")
def cograph_corpus():
    return random_corpus(seed=11, count=120, size_range=(1, 9))


@pytest.fixture(scope="session")
def extended_corpus():
    return random_corpus(seed=12, count=120, size_range=(1, 9), mix=EXTENDED_MIX)


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for number in sorted(results):
            terminalreporter.write_line(results[number])

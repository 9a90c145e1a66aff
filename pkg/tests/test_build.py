import pytest

from dicowidth.build import (
    build_path_decomposition,
    build_tree_decomposition,
    normalize_singleton_bags,
    path_to_tree_decomposition,
)
from dicowidth.decomposition import ArborealDecomposition, DecompositionFormatError, PathDecomposition
from dicowidth.digraph import Digraph, largest_bioriented_clique
from dicowidth.expr import Node, Op, binarize, evaluate, parse_expr, postorder
from dicowidth.verify import verify_path_decomposition, verify_tree_decomposition
from dicowidth.width import annotate

from conftest import digraph, star_expr


def bags(text):
    return [set(b) for b in build_path_decomposition(binarize(parse_expr(text))).bags]


class TestPathBuilder:
    def test_order(self):
        assert bags("a / b") == [{"a"}, {"b"}]

    def test_series(self):
        assert bags("a * b") == [{"a", "b"}]

    def test_star(self):
        p = build_path_decomposition(binarize(star_expr(3)))
        assert [set(b) for b in p.bags] == [{"l1", "c"}, {"l2", "c"}, {"l3", "c"}]
        assert verify_path_decomposition(evaluate(star_expr(3)), p).valid

    def test_single_vertex(self):
        p = build_path_decomposition(parse_expr("a"))
        assert p.bags == (frozenset("a"),) and p.width == 0


class TestTreeBuilder:
    def test_union(self):
        d = build_tree_decomposition(parse_expr("a + b"))
        assert d.w == (frozenset("a"), frozenset("b")) and d.x[1] == frozenset()

    def test_series(self):
        d = build_tree_decomposition(parse_expr("a * b"))
        assert d.w == (frozenset("b"), frozenset("a"))
        assert d.x[1] == frozenset("b")
        assert d.width == 1

    def test_series_over_union(self):
        e = binarize(parse_expr("(a + b) * c"))
        d = build_tree_decomposition(e)
        assert d.is_path() and d.width == 1
        assert d.w[0] == frozenset("c")
        assert verify_tree_decomposition(evaluate(e), d).valid

    def test_reversing_a_cross_arc_breaks_path_certificate(self):
        e = parse_expr("du(a * b, c; b->c)")
        p = build_path_decomposition(e)
        flipped = Digraph(evaluate(e).vertices, (evaluate(e).arcs - {("b", "c")}) | {("c", "b")})
        verdict = verify_path_decomposition(flipped, p)
        assert not verdict.valid and ("dpw-2", ("c", "b")) in verdict.violations


def _check_corpus(corpus):
    for e in corpus:
        b = binarize(e)
        g = evaluate(b)
        ann = annotate(b)
        p = build_path_decomposition(b, ann)
        d = build_tree_decomposition(b, ann)
        pv = verify_path_decomposition(g, p)
        dv = verify_tree_decomposition(g, d)
        assert pv.valid and pv.width == ann.root_dpw
        assert dv.valid and dv.width == ann.root_dtw
        # bags meet every bioriented clique in full at least once
        clique = largest_bioriented_clique(g)
        assert any(clique <= bag for bag in p.bags)


def test_cograph_corpus(cograph_corpus):
    _check_corpus(cograph_corpus)


def test_extended_corpus(extended_corpus):
    _check_corpus(extended_corpus)


def test_bipartite_series_bags():
    # bags of a series composition all contain one whole side
    e = binarize(parse_expr("(a + b + c) * (d + e)"))
    p = build_path_decomposition(e)
    assert all(set("de") <= bag or set("abc") <= bag for bag in p.bags)
    assert p.width == 2


class TestPathToTree:
    def test_example(self):
        g = digraph("a b c | a<>b b<>c")
        d = path_to_tree_decomposition(PathDecomposition.of([{"a", "b"}, {"b", "c"}]), g)
        assert d.w == (frozenset("ab"), frozenset("c"))
        assert d.x == (frozenset(), frozenset("b"))
        assert verify_tree_decomposition(g, d).valid and d.width == 1

    def test_empty_part_is_dropped_without_widening(self):
        g = digraph("a b c d | a<>b c<>d b>c")
        p = PathDecomposition.of([{"a", "b"}, {"b"}, {"c", "d"}])
        assert verify_path_decomposition(g, p).valid
        d = path_to_tree_decomposition(p, g)
        assert len(d) == 2 and d.width == 1
        assert verify_tree_decomposition(g, d).valid

    def test_rejects_invalid_input(self):
        g = digraph("a b | a>b")
        with pytest.raises(DecompositionFormatError):
            path_to_tree_decomposition(PathDecomposition.of([{"b"}, {"a"}]), g)
        with pytest.raises(DecompositionFormatError):
            path_to_tree_decomposition(PathDecomposition.of([{"a"}, {"b"}, {"a"}]))


class TestNormalize:
    def test_edge(self):
        g = digraph("a b | a<>b")
        d = normalize_singleton_bags(ArborealDecomposition((None,), (frozenset("ab"),), (frozenset(),)), g)
        assert d.w == (frozenset("a"), frozenset("b"))
        assert d.x == (frozenset(), frozenset("a"))
        assert verify_tree_decomposition(g, d).valid and d.width == 1

    def test_triangle(self):
        g = evaluate(parse_expr("a * b * c"))
        d = normalize_singleton_bags(ArborealDecomposition((None,), (frozenset("abc"),), (frozenset(),)), g)
        assert [set(x) for x in d.x] == [set(), {"a"}, {"a", "b"}]
        assert verify_tree_decomposition(g, d).valid and d.width == 2

    def test_rejects_invalid_input(self):
        g = digraph("a b | a<>b")
        bad = ArborealDecomposition((None, 0), (frozenset("a"), frozenset("b")), (frozenset(), frozenset()))
        with pytest.raises(DecompositionFormatError):
            normalize_singleton_bags(bad, g)


def _transform_corpus(corpus):
    for e in corpus:
        b = binarize(e)
        g = evaluate(b)
        p = build_path_decomposition(b)
        d = path_to_tree_decomposition(p, g)
        dv = verify_tree_decomposition(g, d)
        assert dv.valid and dv.width <= p.width
        n = normalize_singleton_bags(d, g)
        nv = verify_tree_decomposition(g, n)
        assert nv.valid and nv.width <= dv.width
        assert all(len(part) == 1 for part in n.w)
        m = normalize_singleton_bags(build_tree_decomposition(b), g)
        assert verify_tree_decomposition(g, m).valid and m.width <= annotate(b).root_dtw


def test_transforms_on_corpus(cograph_corpus, extended_corpus):
    _transform_corpus(cograph_corpus)
    _transform_corpus(extended_corpus)


def test_corpus_covers_all_operators(cograph_corpus, extended_corpus):
    ops = {n.op for e in cograph_corpus + extended_corpus for n in postorder(e) if isinstance(n, Node)}
    assert ops == set(Op)

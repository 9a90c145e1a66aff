import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dicowidth.digraph import (
    CapExceeded,
    Digraph,
    GraphError,
    UndirectedGraph,
    build_digraph,
    complement_digraph,
    complete_biorientation,
    converse_digraph,
    format_edge_list,
    induced_subdigraph,
    is_bioriented_clique,
    largest_bioriented_clique,
    parse_edge_list,
    strong_components,
    underlying,
)
from dicowidth.generate import random_digraph

from conftest import bioriented_clique, digraph


@st.composite
def small_digraphs(draw, max_n=7):
    n = draw(st.integers(0, max_n))
    names = [f"v{i}" for i in range(n)]
    pairs = list(itertools.permutations(names, 2))
    arcs = draw(st.sets(st.sampled_from(pairs))) if pairs else set()
    return Digraph(names, arcs)


class TestBuild:
    def test_single_vertex(self):
        g = build_digraph(["a"], [])
        assert len(g) == 1 and not g.arcs

    def test_bioriented_edge(self):
        g = build_digraph(["a", "b"], [("a", "b"), ("b", "a")])
        assert g.arcs == {("a", "b"), ("b", "a")}

    def test_duplicate_arcs_collapse(self):
        assert len(build_digraph(["a", "b"], [("a", "b"), ("a", "b")]).arcs) == 1

    @pytest.mark.parametrize("vertices, arcs", [
        (["a"], [("a", "a")]),
        (["a"], [("a", "b")]),
        (["a", "a"], []),
    ])
    def test_rejects(self, vertices, arcs):
        with pytest.raises(GraphError):
            build_digraph(vertices, arcs)


def test_induced_subdigraph():
    k3 = digraph("a b c | a<>b b<>c a<>c")
    assert induced_subdigraph(k3, {"a", "b"}) == digraph("a b | a<>b")
    assert induced_subdigraph(k3, k3.vertices) == k3
    path = digraph("a b c | a>b b>c")
    assert induced_subdigraph(path, {"a", "c"}).arcs == frozenset()
    with pytest.raises(GraphError):
        induced_subdigraph(path, {"z"})


def test_underlying_and_biorientation():
    path = digraph("a b c | a>b b>c")
    u = underlying(path)
    assert u.edges == {frozenset("ab"), frozenset("bc")}
    assert underlying(digraph("a b | a<>b")).edges == {frozenset("ab")}
    assert underlying(digraph("a b c")).edges == frozenset()
    assert len(complete_biorientation(UndirectedGraph.from_pairs("ab", [("a", "b")])).arcs) == 2
    assert complete_biorientation(UndirectedGraph.from_pairs("abc", [])).arcs == frozenset()
    assert len(complete_biorientation(u).arcs) == 4


def test_complement_converse_examples():
    assert complement_digraph(digraph("a b")) == digraph("a b | a<>b")
    assert converse_digraph(digraph("a b | a>b")) == digraph("a b | b>a")
    assert complement_digraph(bioriented_clique(4)).arcs == frozenset()


@given(small_digraphs())
def test_involutions_and_underlying(g):
    assert complement_digraph(complement_digraph(g)) == g
    assert converse_digraph(converse_digraph(g)) == g
    assert underlying(complete_biorientation(underlying(g))) == underlying(g)
    assert induced_subdigraph(induced_subdigraph(g, g.vertices), g.vertices) == g


class TestStrongComponents:
    def test_path(self):
        cond = strong_components(digraph("a b c | a>b b>c"))
        assert cond.components == (frozenset("a"), frozenset("b"), frozenset("c"))

    def test_strongly_connected(self):
        assert len(strong_components(bioriented_clique(3))) == 1

    def test_two_cliques_joined(self):
        # hand check: {c,d} -> {a,b} by the arc c->a, so {c,d} comes first
        g = digraph("a b c d | a<>b c<>d c>a")
        cond = strong_components(g)
        assert cond.components == (frozenset("cd"), frozenset("ab"))
        assert cond.component_arcs == {(0, 1)}

    def test_tie_break_is_lexicographic(self):
        cond = strong_components(digraph("z y x"))
        assert [min(c) for c in cond.components] == ["x", "y", "z"]

    @given(small_digraphs(max_n=9))
    @settings(max_examples=150)
    def test_against_networkx(self, g):
        cond = strong_components(g)
        ref = nx.DiGraph()
        ref.add_nodes_from(g.vertices)
        ref.add_edges_from(g.arcs)
        assert set(cond.components) == {frozenset(c) for c in nx.strongly_connected_components(ref)}
        assert frozenset().union(*cond.components) == g.vertices
        assert sum(len(c) for c in cond.components) == len(g)
        comp = cond.component_of()
        for u, v in g.arcs:
            if comp[u] != comp[v]:
                assert comp[u] < comp[v]
                assert (comp[u], comp[v]) in cond.component_arcs
        assert all(i < j for i, j in cond.component_arcs)


class TestBiorientedClique:
    def test_whole_clique(self):
        assert len(largest_bioriented_clique(bioriented_clique(4))) == 4

    def test_directed_cycle(self):
        assert len(largest_bioriented_clique(digraph("a b c | a>b b>c c>a"))) == 1

    def test_star(self):
        star = digraph("c l1 l2 l3 | c<>l1 c<>l2 c<>l3")
        best = largest_bioriented_clique(star)
        assert len(best) == 2 and "c" in best

    def test_cap(self):
        with pytest.raises(CapExceeded):
            largest_bioriented_clique(Digraph([str(i) for i in range(5)]), cap=4)

    @given(small_digraphs(max_n=7))
    @settings(max_examples=100)
    def test_against_exhaustive_search(self, g):
        best = largest_bioriented_clique(g)
        assert is_bioriented_clique(g, best)
        order = g.ordered_vertices()
        size = max((k for k in range(len(order) + 1)
                    for s in itertools.combinations(order, k) if is_bioriented_clique(g, s)), default=0)
        assert len(best) == size


def test_edge_list_round_trip():
    text = "# a digraph\n3 2\na\nb\nc  # trailing comment\na b\nb c\n"
    g = parse_edge_list(text)
    assert g == digraph("a b c | a>b b>c")
    assert parse_edge_list(format_edge_list(g)) == g


@pytest.mark.parametrize("text", ["", "2 1\na\nb\n", "1 0\na b\n", "x y\n", "1 1\na\na a\n"])
def test_edge_list_errors(text):
    with pytest.raises(GraphError):
        parse_edge_list(text)


def test_random_digraph_is_reproducible():
    a = random_digraph(random.Random(3), 8)
    b = random_digraph(random.Random(3), 8)
    assert a == b

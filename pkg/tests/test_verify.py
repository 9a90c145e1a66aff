import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dicowidth.build import build_tree_decomposition
from dicowidth.decomposition import ArborealDecomposition, DecompositionFormatError, PathDecomposition
from dicowidth.digraph import Digraph
from dicowidth.expr import binarize, evaluate, parse_expr
from dicowidth.verify import is_z_normal, verify, verify_path_decomposition, verify_tree_decomposition

from conftest import all_digraphs, digraph


class TestPathVerifier:
    def test_valid(self):
        g = digraph("a b c | a>b b>c")
        v = verify_path_decomposition(g, PathDecomposition.of([{"a"}, {"b"}, {"c"}]))
        assert v.valid and v.width == 0 and v.format() == "valid width=0\n"

    def test_backward_arc(self):
        g = digraph("a b | a>b")
        v = verify_path_decomposition(g, PathDecomposition.of([{"b"}, {"a"}]))
        assert not v.valid and v.violations == (("dpw-2", ("a", "b")),)
        assert "dpw-2 witness: a b" in v.format()

    def test_missing_vertex_and_gap(self):
        g = digraph("a b c")
        v = verify_path_decomposition(g, PathDecomposition.of([{"a"}, {"b"}, {"a"}]))
        assert ("dpw-1", ("c",)) in v.violations and ("dpw-3", ("a",)) in v.violations

    def test_unknown_vertex(self):
        with pytest.raises(DecompositionFormatError):
            verify_path_decomposition(digraph("a"), PathDecomposition.of([{"a", "z"}]))

    def test_empty_graph(self):
        assert verify_path_decomposition(Digraph([]), PathDecomposition(())).width == -1


def _literal_path_check(g, bags):
    if set().union(*bags) != set(g.vertices):
        return False
    for u, v in g.arcs:
        if not any(u in bags[i] and v in bags[j] for i in range(len(bags)) for j in range(i, len(bags))):
            return False
    for i, j, k in itertools.combinations(range(len(bags)), 3):
        for v in bags[i] & bags[k]:
            if v not in bags[j]:
                return False
    return True


@pytest.mark.parametrize("n", [1, 2, 3])
def test_path_verifier_exhaustive(n):
    names = [chr(ord("a") + i) for i in range(n)]
    subsets = [frozenset(c) for r in range(1, n + 1) for c in itertools.combinations(names, r)]
    sequences = [seq for length in (1, 2, 3) for seq in itertools.product(subsets, repeat=length)]
    for g in all_digraphs(n):
        for seq in sequences:
            got = verify_path_decomposition(g, PathDecomposition(seq)).valid
            assert got == _literal_path_check(g, list(seq)), (g, seq)


class TestZNormal:
    def test_cycle(self):
        g = digraph("a b c | a>b b>c c>a")
        assert is_z_normal(g, {"a"}, set()) == (False, ("a", "b", "c", "a"))
        assert is_z_normal(g, {"a"}, {"b"}) == (True, None)

    def test_overlap_allowed(self):
        g = digraph("a b | a<>b")
        assert is_z_normal(g, {"a", "b"}, {"a"})[0]
        assert is_z_normal(g, {"a"}, {"a"})[0]

    def test_disjoint_variant(self):
        with pytest.raises(ValueError):
            is_z_normal(digraph("a b"), {"a"}, {"a"}, disjoint=True)
        assert is_z_normal(digraph("a b | a<>b"), {"a"}, {"b"}, disjoint=True)[0]


def _walk_exists(g, s, z):
    """Depth-first enumeration of all walks of bounded length in g - z."""
    s, z = set(s), set(z)
    start = sorted(s - z)
    limit = len(g) + 1

    def extend(walk, left):
        if len(walk) > limit:
            return False
        for w in g.out_neighbors(walk[-1]):
            if w in z:
                continue
            if w in s:
                if left:
                    return True
                continue
            if extend(walk + [w], True):
                return True
        return False

    return any(extend([v], False) for v in start)


@st.composite
def graph_and_sets(draw):
    n = draw(st.integers(1, 6))
    names = [f"v{i}" for i in range(n)]
    pairs = list(itertools.permutations(names, 2))
    arcs = draw(st.sets(st.sampled_from(pairs))) if pairs else set()
    s = draw(st.sets(st.sampled_from(names)))
    z = draw(st.sets(st.sampled_from(names)))
    return Digraph(names, arcs), s, z


@given(graph_and_sets())
@settings(max_examples=300)
def test_z_normal_against_walk_enumeration(case):
    g, s, z = case
    ok, walk = is_z_normal(g, s, z)
    assert ok == (not _walk_exists(g, s, z))
    if not ok:
        inside = set(s) - set(z)
        assert walk[0] in inside and walk[-1] in inside
        assert all(v not in s and v not in z for v in walk[1:-1]) and len(walk) >= 3
        assert all(g.has_arc(u, v) for u, v in zip(walk, walk[1:]))


class TestTreeVerifier:
    def test_built_certificate(self):
        e = binarize(parse_expr("(a + b) * c"))
        g = evaluate(e)
        v = verify(g, build_tree_decomposition(e))
        assert v.valid and v.width == 1

    def test_cleared_guard_gives_walk(self):
        g = evaluate(parse_expr("a * b"))
        d = build_tree_decomposition(parse_expr("a * b"))
        bad = ArborealDecomposition(d.parent, d.w, (frozenset(), frozenset()))
        v = verify_tree_decomposition(g, bad)
        assert not v.valid and v.violations == (("dtw-2", ("a", "b", "a")),)
        assert v.format() == "invalid width=0\ndtw-2 walk: a b a\n"

    def test_disjoint_flag(self):
        g = digraph("a b | a<>b")
        # guard {a} meets the child's subtree {a}; only the disjoint variant objects
        d = ArborealDecomposition((None, 0), (frozenset("b"), frozenset("a")), (frozenset(), frozenset("a")))
        assert verify_tree_decomposition(g, d).valid
        assert not verify_tree_decomposition(g, d, disjoint_normality=True).valid

    def test_partition_violations(self):
        g = digraph("a b c")
        d = ArborealDecomposition((None, 0), (frozenset("ab"), frozenset("b")), (frozenset(), frozenset()))
        v = verify_tree_decomposition(g, d)
        assert ("dtw-1", ("b",)) in v.violations and ("dtw-1", ("c",)) in v.violations

    @pytest.mark.parametrize("parent", [(None, None), (1, 0)])
    def test_malformed_tree(self, parent):
        d = ArborealDecomposition(parent, (frozenset("a"), frozenset("b")), (frozenset(), frozenset()))
        with pytest.raises(DecompositionFormatError):
            verify_tree_decomposition(digraph("a b"), d)

    def test_unknown_guard_label(self):
        d = ArborealDecomposition((None, 0), (frozenset("a"), frozenset("b")), (frozenset(), frozenset("z")))
        with pytest.raises(DecompositionFormatError):
            verify_tree_decomposition(digraph("a b"), d)

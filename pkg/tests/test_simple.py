import pytest
from hypothesis import given, strategies as st

from conftest import graphs, sparse_graphs
from oracles import alpha
from kernelmis import generators
from kernelmis.graph import Graph
from kernelmis.reductions.simple import (
    ReductionError,
    apply_fold,
    apply_simplicial,
    is_foldable,
    is_simplicial,
    reduce_simple,
)
from kernelmis.trace import ReductionTrace

P3_EDGES = [(0, 1), (1, 2)]


def test_is_simplicial_examples():
    k3 = generators.complete(3)
    assert all(is_simplicial(k3, v) for v in range(3))
    c4 = generators.cycle(4)
    assert not any(is_simplicial(c4, v) for v in range(4))
    star = generators.star(3)
    assert is_simplicial(star, 1) and not is_simplicial(star, 0)
    assert is_simplicial(Graph(1), 0)


def test_is_simplicial_degree_cap():
    k5 = generators.complete(5)
    assert is_simplicial(k5, 0)
    assert not is_simplicial(k5, 0, max_degree=3)


def test_is_simplicial_dead_vertex():
    g = Graph(2)
    g.remove_vertex(0)
    with pytest.raises(KeyError):
        is_simplicial(g, 0)


def test_apply_simplicial_examples():
    g, t = generators.complete(3), ReductionTrace()
    apply_simplicial(g, 0, t)
    assert g.n == 0 and t.offset == 1

    g, t = Graph(3, P3_EDGES), ReductionTrace()
    apply_simplicial(g, 0, t)
    assert g.vertices() == [2] and t.offset == 1

    g, t = generators.star(4), ReductionTrace()
    apply_simplicial(g, 1, t)
    assert g.vertices() == [2, 3, 4] and g.m == 0


def test_apply_simplicial_rejects():
    with pytest.raises(ReductionError):
        apply_simplicial(generators.cycle(4), 0, ReductionTrace())


def test_fold_p3():
    g, t = Graph(3, P3_EDGES), ReductionTrace()
    x = apply_fold(g, 1, t)
    assert g.vertices() == [x] and g.degree(x) == 0
    assert t.offset == 1 and alpha(Graph(3, P3_EDGES)) == alpha(g) + 1


def test_fold_c4():
    g, t = generators.cycle(4), ReductionTrace()
    x = apply_fold(g, 1, t)
    assert g.vertices() == [3, x] and g.has_edge(x, 3)
    assert alpha(generators.cycle(4)) == alpha(g) + 1


def test_fold_c5_gives_triangle():
    g, t = generators.cycle(5), ReductionTrace()
    x = apply_fold(g, 1, t)
    assert sorted(g.adj[x]) == [3, 4] and g.has_edge(3, 4)
    assert alpha(generators.cycle(5)) == alpha(g) + 1 == 2


def test_fold_rejects():
    with pytest.raises(ReductionError):
        apply_fold(generators.complete(3), 0, ReductionTrace())
    with pytest.raises(ReductionError):
        apply_fold(generators.star(3), 0, ReductionTrace())


@given(sparse_graphs(max_n=14), st.data())
def test_fold_neighborhood_and_alpha(g, data):
    foldable = [v for v in g.vertices() if is_foldable(g, v)]
    if not foldable:
        return
    v = data.draw(st.sampled_from(foldable))
    u, w = sorted(g.adj[v])
    expected = (g.adj[u] | g.adj[w]) - {u, v, w}
    before = alpha(g)
    h, t = g.copy(), ReductionTrace()
    x = apply_fold(h, v, t)
    assert h.adj[x] == expected
    assert before == t.offset + alpha(h)
    h.check_invariants()


@pytest.mark.parametrize("seed", range(100))
def test_forests_kernelize_empty(seed):
    g = generators.tree(1 + seed % 60, seed)
    h, t = g.copy(), ReductionTrace()
    reduce_simple(h, t)
    assert h.n == 0
    lifted = t.lift(())
    assert g.is_independent(lifted) and len(lifted) == t.offset
    if g.n <= 24:
        assert t.offset == alpha(g)


def test_c6_empty_kernel():
    h, t = generators.cycle(6), ReductionTrace()
    reduce_simple(h, t)
    assert h.n == 0 and t.offset == alpha(generators.cycle(6)) == 3


def test_c4_with_chord():
    g = Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
    assert is_simplicial(g, 1)
    h, t = g.copy(), ReductionTrace()
    reduce_simple(h, t)
    assert h.n == 0 and t.offset == 2 == alpha(g)


@given(sparse_graphs(max_n=16))
def test_alpha_preserved(g):
    h, t = g.copy(), ReductionTrace()
    reduce_simple(h, t)
    h.check_invariants()
    assert alpha(g) == t.offset + alpha(h)


@given(sparse_graphs(max_n=16))
def test_fixpoint_and_idempotence(g):
    h, t = g.copy(), ReductionTrace()
    reduce_simple(h, t)
    assert not any(is_simplicial(h, v) or is_foldable(h, v) for v in h.vertices())
    snapshot = (h.vertices(), list(h.edges()), len(t))
    assert reduce_simple(h, t) == 0
    assert (h.vertices(), list(h.edges()), len(t)) == snapshot


@given(st.integers(1, 80), st.integers(0, 10**6))
def test_chordal_completeness(n, seed):
    h, t = generators.chordal(n, seed), ReductionTrace()
    reduce_simple(h, t)
    assert h.n == 0


@given(st.integers(3, 200))
def test_cycles_kernelize_empty(n):
    h, t = generators.cycle(n), ReductionTrace()
    reduce_simple(h, t)
    assert h.n == 0 and t.offset == n // 2


@given(graphs(max_n=12))
def test_offset_matches_event_gains(g):
    h, t = g.copy(), ReductionTrace()
    reduce_simple(h, t)
    assert t.offset == sum(e.gain for e in t.events)

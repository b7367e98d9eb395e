import time

import pytest
from hypothesis import given, strategies as st

from conftest import graphs, sparse_graphs
from oracles import alpha
from kernelmis import generators
from kernelmis.graph import Graph, induced_subgraph
from kernelmis.solver import coloring_bound, solve, solve_component


def test_coloring_bound_independent_candidates():
    g = Graph(5)
    colors, k = coloring_bound(g, range(5))
    assert k == 5 and sorted(colors.values()) == [1, 2, 3, 4, 5]


def test_coloring_bound_clique():
    colors, k = coloring_bound(generators.complete(4), range(4))
    assert k == 1 and set(colors.values()) == {1}


def test_coloring_bound_c5():
    c5 = generators.cycle(5)
    _, k = coloring_bound(c5, range(5))
    assert alpha(c5) <= k <= 3 and k >= 2


def test_coloring_bound_empty_and_dead():
    assert coloring_bound(Graph(3), []) == ({}, 0)
    g = Graph(2)
    g.remove_vertex(1)
    with pytest.raises(KeyError):
        coloring_bound(g, [1])


@given(graphs(max_n=12), st.data())
def test_coloring_bound_admissible(g, data):
    cand = data.draw(st.sets(st.sampled_from(g.vertices()))) if g.n else set()
    colors, k = coloring_bound(g, cand)
    h, _ = induced_subgraph(g, cand)
    assert k >= alpha(h)
    for a in cand:
        for b in cand:
            # one class is a clique of g
            if a < b and colors[a] == colors[b]:
                assert g.has_edge(a, b)


def test_solve_component_examples():
    assert solve_component(generators.complete(5)).size == 1
    assert solve_component(generators.cycle(7)).size == alpha(generators.cycle(7)) == 3
    r = solve_component(generators.petersen())
    assert r.size == 4 == alpha(generators.petersen()) and r.optimal


def test_solve_examples():
    two = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    res, parts = solve(two)
    assert res.size == 2 and len(parts) == 2
    res, parts = solve(Graph())
    assert res.vertices == [] and res.optimal and parts == []


@pytest.mark.parametrize("seed", range(10))
def test_solve_gnp18(seed):
    g = generators.gnp(18, 0.3, seed)
    res, _ = solve(g)
    assert res.optimal and g.is_independent(res.vertices)
    assert res.size == alpha(g)


@given(sparse_graphs(max_n=18))
def test_solve_exact_random(g):
    res, _ = solve(g)
    assert g.is_independent(res.vertices) and res.size == alpha(g)


def test_solve_ignores_dead_vertices():
    g = generators.cycle(6)
    g.remove_vertex(0)
    res, _ = solve(g)
    assert 0 not in res.vertices and res.size == 3


def test_anytime_monotone_and_timeout_independent():
    g = generators.gnp(200, 0.04, 3)
    seen = []
    r = solve_component(g, deadline=time.monotonic() + 0.2, check_every=16, on_improve=seen.append)
    assert seen == sorted(seen) and seen[-1] == r.size
    assert g.is_independent(r.vertices)
    assert not r.optimal


def test_deadline_already_passed():
    g = generators.gnp(40, 0.3, 1)
    r = solve_component(g, deadline=time.monotonic() - 1)
    assert not r.optimal and r.nodes == 0 and g.is_independent(r.vertices)


def test_greedy_meeting_bound_is_optimal_without_search():
    r = solve_component(generators.star(6), deadline=time.monotonic() - 1)
    assert r.optimal and r.size == 6


def test_parallel_jobs_match_serial():
    g = Graph(0)
    for seed in range(4):
        h = generators.gnp(12, 0.3, seed)
        base = g.capacity
        for _ in range(h.n):
            g.add_vertex()
        for u, v in h.edges():
            g.add_edge(base + u, base + v)
    serial, _ = solve(g)
    parallel, _ = solve(g, jobs=2)
    assert serial.vertices == parallel.vertices

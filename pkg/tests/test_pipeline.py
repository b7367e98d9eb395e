import pytest
from hypothesis import given, strategies as st

from conftest import sparse_graphs
from oracles import alpha
from kernelmis import generators
from kernelmis.graph import Graph, brute_force_mis
from kernelmis.pipeline import (
    STRATEGIES,
    ReconstructionError,
    kernelize,
    reconstruct,
    solve_exact,
    verify_solution,
)
from kernelmis.reductions.simple import apply_fold
from kernelmis.trace import ReductionTrace

P3 = generators.path(3)


@pytest.mark.parametrize("seed", range(5))
def test_kernelize_forest_simple(seed):
    g = generators.tree(20, seed)
    kr = kernelize(g, "simple")
    assert kr.kernel.n == 0 and kr.offset == alpha(g)
    assert (kr.components, kr.k_max) == (0, 0)


def test_kernelize_c4_critical():
    kr = kernelize(generators.cycle(4), "critical")
    assert kr.kernel.n == 4 and kr.offset == 0
    assert (kr.components, kr.k_max) == (1, 4)
    assert kr.stats["critical_iterations"] == 1


def test_kernelize_p3_maxcritical():
    kr = kernelize(P3, "maxcritical")
    assert kr.kernel.n == 0 and kr.offset == 2


def test_kernelize_leaves_input_alone():
    g = generators.cycle(6)
    kernelize(g, "advanced")
    assert (g.n, g.m) == (6, 6)


def test_unknown_strategy():
    with pytest.raises(ValueError):
        kernelize(P3, "magic")


@given(sparse_graphs(max_n=14), st.sampled_from(sorted(STRATEGIES)))
def test_offset_identity(g, strategy):
    kr = kernelize(g, strategy)
    assert alpha(g) == kr.offset + alpha(kr.kernel)
    assert kr.kernel.n == kr.kernel.capacity
    assert kr.k_max <= kr.kernel.n


def test_reconstruct_identity():
    g = generators.cycle(5)
    assert reconstruct(ReductionTrace(), [0, 2], g) == [0, 2]


def test_reconstruct_fold():
    g, t = P3.copy(), ReductionTrace()
    x = apply_fold(g, 1, t)
    assert reconstruct(t, [x], P3) == [0, 2]


def test_reconstruct_c5_fold():
    c5 = generators.cycle(5)
    g, t = c5.copy(), ReductionTrace()
    x = apply_fold(g, 1, t)
    for pick in (x, 3, 4):
        lifted = reconstruct(t, [pick], c5)
        assert len(lifted) == 2 == alpha(c5) and c5.is_independent(lifted)


def test_reconstruct_rejects_bad_kernel_set():
    c5 = generators.cycle(5)
    g, t = c5.copy(), ReductionTrace()
    x = apply_fold(g, 1, t)
    with pytest.raises(ReconstructionError):
        reconstruct(t, [x, 3], c5)
    with pytest.raises(ReconstructionError):
        reconstruct(ReductionTrace(), [99], c5)


def test_solve_exact_c6():
    r = solve_exact(generators.cycle(6), "simple")
    assert (r.alpha, r.status, r.kernel.kernel.n) == (3, "exact", 0)
    assert r.alpha == alpha(generators.cycle(6))


@pytest.mark.parametrize("strategy", sorted(STRATEGIES))
@pytest.mark.parametrize("seed", range(5))
def test_solve_exact_gnp16(strategy, seed):
    g = generators.gnp(16, 0.25, seed)
    r = solve_exact(g, strategy)
    assert r.alpha == alpha(g) and verify_solution(g, r.mis)


def test_solve_exact_empty():
    r = solve_exact(Graph(), "advanced")
    assert (r.alpha, r.mis, r.status) == (0, [], "exact")


@given(sparse_graphs(max_n=16))
def test_strategies_agree(g):
    expected = len(brute_force_mis(g))
    for strategy in STRATEGIES:
        r = solve_exact(g, strategy)
        assert r.alpha == expected and verify_solution(g, r.mis)


def test_timeout_report():
    g = generators.gnp(200, 0.04, 3)
    r = solve_exact(g, "simple", timeout=0)
    assert r.status == "timeout" and r.alpha is None
    assert r.kernel.kernel.n > 0
    assert verify_solution(g, r.mis)


def test_verify_examples():
    assert verify_solution(P3, [0, 2]).kind == "valid"
    v = verify_solution(P3, [0, 1])
    assert v.kind == "violation" and v.edge == (0, 1) and not v
    assert verify_solution(generators.complete(3), [0])
    assert verify_solution(P3, [0, 2], claimed=3).kind == "claims-mismatch"
    assert verify_solution(P3, [7]).kind == "claims-mismatch"
    assert verify_solution(P3, [0, 0]).kind == "claims-mismatch"

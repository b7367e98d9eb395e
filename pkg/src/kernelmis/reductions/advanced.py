"""LP, unconfined, twin and funnel reductions, plus the combined fixpoint."""

from __future__ import annotations

from collections import Counter, defaultdict
from fractions import Fraction

from ..graph import Graph
from ..matching import MatchingStats, build_bidouble, max_matching, min_vertex_cover_bipartite
from ..trace import (
    FunnelResolve,
    LPInclude,
    ReductionTrace,
    TwinGadget,
    TwinInclude,
    UnconfinedExclude,
)
from .simple import ReductionError, is_simplicial, reduce_simple

HALF = Fraction(1, 2)


def lp_solution(g: Graph, stats: MatchingStats | None = None) -> dict[int, Fraction]:
    """Half-integral optimum of max sum x_v s.t. x_u + x_v <= 1, x >= 0.

    From a minimum vertex cover C of B(G): x_v = (2 - |{v, v'} & C|) / 2.
    """
    b = build_bidouble(g)
    m = max_matching(b, stats=stats)
    cl, cr = min_vertex_cover_bipartite(b, m)
    hits = [0] * b.n_left
    for x in cl:
        hits[x] += 1
    for y in cr:
        hits[y] += 1
    return {v: Fraction(2 - hits[i], 2) for i, v in enumerate(b.origin)}


def lp_step(g: Graph, trace: ReductionTrace, stats: MatchingStats | None = None) -> bool:
    """Solve the LP once and take every value-1 vertex. False if there are none."""
    x = lp_solution(g, stats)
    ones = sorted(v for v, val in x.items() if val == 1)
    if not ones:
        return False
    nbrs = set()
    for v in ones:
        nbrs |= g.adj[v]
    g.remove_vertices(ones)
    g.remove_vertices(sorted(nbrs))
    trace.record(LPInclude(tuple(ones), tuple(sorted(nbrs))))
    return True


def lp_reduce(g: Graph, trace: ReductionTrace, stats: Counter | None = None) -> int:
    if stats is None:
        stats = Counter()
    mstats = MatchingStats()
    fired = 0
    while g.n and lp_step(g, trace, mstats):
        fired += 1
    stats["lp"] += fired
    stats["matchings"] += mstats.matchings
    return fired


def is_unconfined(g: Graph, v: int) -> bool:
    if v not in g:
        raise KeyError(f"vertex {v} is not a live vertex")
    adj = g.adj
    s = {v}
    ns = set(adj[v])
    while True:
        closed = s | ns
        best = None
        for u in sorted(ns):
            if len(adj[u] & s) != 1:
                continue
            outside = adj[u] - closed
            if best is None or len(outside) < len(best):
                best = outside
                if not best:
                    break
        if best is None:
            return False
        if not best:
            return True
        if len(best) > 1:
            return False
        (w,) = best
        s.add(w)
        ns = (ns | adj[w]) - s


def apply_unconfined(g: Graph, v: int, trace: ReductionTrace) -> None:
    if not is_unconfined(g, v):
        raise ReductionError(f"vertex {v} is confined")
    g.remove_vertex(v)
    trace.record(UnconfinedExclude(v))


def reduce_unconfined(g: Graph, trace: ReductionTrace, stats: Counter | None = None) -> int:
    """Ascending sweeps removing unconfined vertices until a sweep removes none."""
    if stats is None:
        stats = Counter()
    total = 0
    while True:
        fired = 0
        for v in g.vertices():
            if v in g and is_unconfined(g, v):
                apply_unconfined(g, v, trace)
                fired += 1
        total += fired
        if not fired:
            break
    stats["unconfined"] += total
    return total


def find_twins(g: Graph) -> list[tuple[int, int]]:
    """Pairs of degree-3 vertices with identical neighborhoods, ascending."""
    groups: dict[frozenset, list[int]] = defaultdict(list)
    for v in g.vertices():
        if len(g.adj[v]) == 3:
            groups[frozenset(g.adj[v])].append(v)
    pairs = [(vs[0], vs[1]) for vs in groups.values() if len(vs) > 1]
    return sorted(pairs)


def apply_twin(g: Graph, u: int, v: int, trace: ReductionTrace) -> int | None:
    """Resolve twins u, v. Returns the gadget vertex id, or None when both are taken."""
    nu = g.adj[u]
    if len(nu) != 3 or g.adj[v] != nu or u == v:
        raise ReductionError(f"{u} and {v} are not degree-3 twins")
    hood = tuple(sorted(nu))
    if any(g.has_edge(a, b) for a in hood for b in hood if a < b):
        g.remove_vertices((u, v, *hood))
        trace.record(TwinInclude(u, v, hood))
        return None
    two = set()
    for x in hood:
        two |= g.adj[x]
    two -= {u, v, *hood}
    g.remove_vertices((u, v, *hood))
    w = g.add_vertex()
    for y in sorted(two):
        g.add_edge(w, y)
    trace.record(TwinGadget(u, v, hood, w, tuple(sorted(two))))
    return w


def twin_reduce(g: Graph, trace: ReductionTrace, stats: Counter | None = None) -> int:
    if stats is None:
        stats = Counter()
    fired = 0
    while True:
        pairs = find_twins(g)
        if not pairs:
            break
        for u, v in pairs:
            if u in g and v in g and len(g.adj[u]) == 3 and g.adj[u] == g.adj[v]:
                w = apply_twin(g, u, v, trace)
                stats["twin_include" if w is None else "twin_gadget"] += 1
                fired += 1
    return fired


def _is_clique_without(g: Graph, nbrs: list[int], skip: int) -> bool:
    rest = [x for x in nbrs if x != skip]
    return all(b in g.adj[a] for i, a in enumerate(rest) for b in rest[i + 1:])


def funnel_partner(g: Graph, v: int) -> int | None:
    """Smallest u in N(v) with N(v) - {u} a clique, if v and u are not simplicial."""
    nbrs = sorted(g.adj[v])
    pair = None
    for i, a in enumerate(nbrs):
        for b in nbrs[i + 1:]:
            if b not in g.adj[a]:
                pair = (a, b)
                break
        if pair:
            break
    if pair is None:
        return None  # v is simplicial
    for u in pair:
        if _is_clique_without(g, nbrs, u) and not is_simplicial(g, u):
            return u
    return None


def find_funnel(g: Graph) -> tuple[int, int] | None:
    for v in g.vertices():
        u = funnel_partner(g, v)
        if u is not None:
            return u, v
    return None


def apply_funnel(g: Graph, u: int, v: int, trace: ReductionTrace) -> None:
    """{u} and {v} are alternatives: drop u, v and their common neighbors and
    join the remaining private neighborhoods completely."""
    if u not in g.adj[v] or not _is_clique_without(g, sorted(g.adj[v]), u):
        raise ReductionError(f"({u}, {v}) is not a funnel")
    nu, nv = set(g.adj[u]), set(g.adj[v])
    common = nu & nv
    outer_a = sorted(nu - common - {v})
    outer_b = sorted(nv - common - {u})
    g.remove_vertices(sorted({u, v} | common))
    added = []
    for a in outer_a:
        for b in outer_b:
            if g.add_edge(a, b):
                added.append((min(a, b), max(a, b)))
    trace.record(
        FunnelResolve((u,), (v,), tuple(sorted(common)), tuple(added), tuple(sorted(nu)), tuple(sorted(nv)))
    )


def funnel_reduce(g: Graph, trace: ReductionTrace, stats: Counter | None = None) -> int:
    if stats is None:
        stats = Counter()
    fired = 0
    for v in g.vertices():
        if v not in g:
            continue
        u = funnel_partner(g, v)
        if u is not None:
            apply_funnel(g, u, v, trace)
            fired += 1
    stats["funnel"] += fired
    return fired


def reduce_advanced(g: Graph, trace: ReductionTrace, stats: Counter | None = None) -> int:
    """Fixpoint over simplicial, fold, unconfined, twin, funnel, then LP.

    Each rule runs only once every cheaper rule is exhausted; any change
    restarts from the simple rules.
    """
    if stats is None:
        stats = Counter()
    fired = 0
    while True:
        fired += reduce_simple(g, trace, stats)
        for rule in (reduce_unconfined, twin_reduce, funnel_reduce, lp_reduce):
            got = rule(g, trace, stats)
            if got:
                fired += got
                break
        else:
            return fired

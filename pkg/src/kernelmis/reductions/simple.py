"""Simplicial (isolated) vertex removal at any degree and degree-2 folding."""

from __future__ import annotations

from collections import Counter, deque
from typing import Iterable

from ..graph import Graph
from ..trace import Fold, ReductionTrace, SimplicialInclude


class ReductionError(ValueError):
    pass


def is_simplicial(g: Graph, v: int, max_degree: int | None = None) -> bool:
    if v not in g:
        raise KeyError(f"vertex {v} is not a live vertex")
    nbrs = sorted(g.adj[v])
    if max_degree is not None and len(nbrs) > max_degree:
        return False
    adj = g.adj
    for i, a in enumerate(nbrs):
        na = adj[a]
        # a must see v and the other d-1 neighbors
        if len(na) < len(nbrs):
            return False
        for b in nbrs[i + 1:]:
            if b not in na:
                return False
    return True


def is_foldable(g: Graph, v: int) -> bool:
    if len(g.adj[v]) != 2:
        return False
    u, w = g.adj[v]
    return not g.has_edge(u, w)


def apply_simplicial(g: Graph, v: int, trace: ReductionTrace) -> list[int]:
    """Take v, drop N[v]. Returns the vertices whose neighborhood changed."""
    if not is_simplicial(g, v):
        raise ReductionError(f"vertex {v} is not simplicial")
    closed = [v] + sorted(g.adj[v])
    touched = set()
    for x in closed[1:]:
        touched |= g.adj[x]
    g.remove_vertices(closed)
    touched.difference_update(closed)
    trace.record(SimplicialInclude(v, tuple(closed)))
    return sorted(touched)


def apply_fold(g: Graph, v: int, trace: ReductionTrace) -> int:
    """Contract v and its two non-adjacent neighbors into a fresh vertex."""
    if v not in g or len(g.adj[v]) != 2:
        raise ReductionError(f"vertex {v} does not have degree 2")
    u, w = sorted(g.adj[v])
    if g.has_edge(u, w):
        raise ReductionError(f"neighbors of {v} are adjacent; vertex is simplicial")
    nbrs = (g.adj[u] | g.adj[w]) - {u, v, w}
    g.remove_vertices((u, v, w))
    x = g.add_vertex()
    for y in sorted(nbrs):
        g.add_edge(x, y)
    trace.record(Fold(v, u, w, x, tuple(sorted(nbrs))))
    return x


def reduce_simple(
    g: Graph,
    trace: ReductionTrace,
    stats: Counter | None = None,
    seeds: Iterable[int] | None = None,
    max_degree: int | None = None,
) -> int:
    """Apply simplicial removal and folding until neither fires.

    ``seeds`` restricts the initial worklist (all live vertices by default);
    ``max_degree`` optionally caps the simplicial test. Returns the number of
    reductions applied.
    """
    if stats is None:
        stats = Counter()
    queue = deque(g.vertices() if seeds is None else sorted(set(seeds)))
    queued = set(queue)
    fired = 0

    def push(vs):
        for x in vs:
            if x not in queued:
                queued.add(x)
                queue.append(x)

    while queue:
        v = queue.popleft()
        queued.discard(v)
        if v not in g:
            continue
        if is_simplicial(g, v, max_degree):
            push(apply_simplicial(g, v, trace))
            stats["simplicial"] += 1
            fired += 1
        elif is_foldable(g, v):
            x = apply_fold(g, v, trace)
            push([x, *sorted(g.adj[x])])
            stats["fold"] += 1
            fired += 1
    return fired

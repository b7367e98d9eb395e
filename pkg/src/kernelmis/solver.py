"""Exact maximum independent set by coloring-bounded branch and bound.

This is maximum-clique search (MCQ/MCS style) run on the complement relation
without materializing the complement: two candidates conflict, and may not
share a color class, iff they are NOT adjacent in g. A color class is
therefore a clique of g, and a set of candidates covered by k cliques holds
at most k independent vertices.

Vertex sets are Python ints used as bitsets over a degree-ascending order.
"""

from __future__ import annotations

import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable

from .graph import Graph, connected_components, induced_subgraph


@dataclass
class SearchResult:
    vertices: list[int]
    optimal: bool
    nodes: int = 0
    root_bound: int = 0

    @property
    def size(self) -> int:
        return len(self.vertices)


class _Timeout(Exception):
    pass


def _greedy_classes(adj: list[int], cand: int) -> list[tuple[int, int]]:
    """Greedy sequential coloring of cand, lowest bit first.

    Returns (vertex, color) in coloring order; colors are 1-based and each
    class is a clique of g.
    """
    out = []
    color = 0
    while cand:
        color += 1
        q = cand
        while q:
            low = q & -q
            v = low.bit_length() - 1
            cand ^= low
            q ^= low
            q &= adj[v]
            out.append((v, color))
    return out


def _bitsets(g: Graph, order: list[int]) -> list[int]:
    pos = {v: i for i, v in enumerate(order)}
    adj = [0] * len(order)
    for i, v in enumerate(order):
        mask = 0
        for u in g.adj[v]:
            j = pos.get(u)
            if j is not None:
                mask |= 1 << j
        adj[i] = mask
    return adj


def coloring_bound(g: Graph, candidates) -> tuple[dict[int, int], int]:
    """Greedy clique-cover coloring of the candidates in ascending id order.

    The number of colors bounds the independence number of G[candidates].
    """
    order = sorted(candidates)
    for v in order:
        if v not in g:
            raise KeyError(f"vertex {v} is not a live vertex")
    adj = _bitsets(g, order)
    classes = _greedy_classes(adj, (1 << len(order)) - 1)
    colors = {order[i]: c for i, c in classes}
    return colors, max(colors.values(), default=0)


def _greedy_incumbent(adj: list[int], k: int) -> list[int]:
    taken = []
    blocked = 0
    for i in range(k):  # bit order is ascending degree already
        if not blocked >> i & 1:
            taken.append(i)
            blocked |= adj[i] | (1 << i)
    return taken


def solve_component(
    g: Graph,
    deadline: float | None = None,
    check_every: int = 1024,
    on_improve: Callable[[int], None] | None = None,
) -> SearchResult:
    """Exact MIS of g. ``deadline`` is a time.monotonic() instant.

    On timeout the best set found so far is returned with optimal=False.
    ``on_improve`` receives the incumbent size every time it grows.
    """
    verts = g.vertices()
    order = sorted(verts, key=lambda v: (len(g.adj[v]), v))
    k = len(order)
    adj = _bitsets(g, order)
    best = _greedy_incumbent(adj, k)
    if on_improve is not None:
        on_improve(len(best))
    full = (1 << k) - 1
    nodes = 0
    current: list[int] = []
    root_bound = 0

    def expand(cand: int) -> None:
        nonlocal best, nodes
        nodes += 1
        if deadline is not None and nodes % check_every == 0 and time.monotonic() >= deadline:
            raise _Timeout
        classes = _greedy_classes(adj, cand)
        for v, color in reversed(classes):
            if len(current) + color <= len(best):
                return
            current.append(v)
            nxt = cand & ~adj[v] & ~(1 << v)
            if nxt:
                expand(nxt)
            elif len(current) > len(best):
                best = list(current)
                if on_improve is not None:
                    on_improve(len(best))
            current.pop()
            cand &= ~(1 << v)

    # recursion depth is bounded by the independence number
    if sys.getrecursionlimit() < min(k, 20000) + 200:
        sys.setrecursionlimit(min(k, 20000) + 200)
    optimal = True
    if k:
        root_bound = _greedy_classes(adj, full)[-1][1]
        if len(best) >= root_bound:
            pass  # greedy already meets the clique-cover bound
        elif deadline is not None and time.monotonic() >= deadline:
            optimal = False
        else:
            try:
                expand(full)
            except _Timeout:
                optimal = False
    return SearchResult(sorted(order[i] for i in best), optimal, nodes, root_bound)


def _solve_piece(args):
    g, deadline, check_every = args
    return solve_component(g, deadline, check_every)


def solve(
    g: Graph, deadline: float | None = None, jobs: int = 1, check_every: int = 1024
) -> tuple[SearchResult, list[SearchResult]]:
    """Solve each connected component and take the union.

    Returns the combined result (optimal iff every component finished) and
    the per-component results in ascending-smallest-id order.
    """
    pieces = []
    for comp in connected_components(g):
        h, mapping = induced_subgraph(g, comp)
        pieces.append((h, mapping))
    work = [(h, deadline, check_every) for h, _ in pieces]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_solve_piece, work, chunksize=8))
    else:
        results = [_solve_piece(w) for w in work]
    chosen = []
    for (_, mapping), res in zip(pieces, results):
        chosen.extend(mapping[i] for i in res.vertices)
    total = SearchResult(
        sorted(chosen),
        all(r.optimal for r in results),
        sum(r.nodes for r in results),
        sum(r.root_bound for r in results),
    )
    return total, results

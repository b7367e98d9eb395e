"""Bi-double graphs and augmenting-path bipartite matching with warm starts.

The search is plain depth-first augmentation (no Hopcroft-Karp layering),
scanning right neighbors in ascending id and free left roots in ascending id.
One *search* is a sweep over all free left roots sharing a visited set; it
costs O(n + m) and augments along every vertex-disjoint path it stumbles on.
A sweep that augments nothing proves the matching maximum.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Collection

from .graph import Graph


@dataclass
class BipartiteGraph:
    n_left: int
    n_right: int
    adj: list[list[int]]  # left -> ascending right ids
    origin: list[int] | None = None  # compact id -> source-graph vertex (both sides)

    @property
    def num_edges(self) -> int:
        return sum(len(a) for a in self.adj)

    def edges(self):
        for x, nbrs in enumerate(self.adj):
            for y in nbrs:
                yield x, y

    def right_adj(self) -> list[list[int]]:
        radj: list[list[int]] = [[] for _ in range(self.n_right)]
        for x, y in self.edges():
            radj[y].append(x)
        return radj


@dataclass
class Matching:
    match_left: list[int]
    match_right: list[int]
    size: int = 0

    @classmethod
    def empty(cls, b: BipartiteGraph) -> Matching:
        return cls([-1] * b.n_left, [-1] * b.n_right, 0)

    def copy(self) -> Matching:
        return Matching(list(self.match_left), list(self.match_right), self.size)

    def pairs(self) -> list[tuple[int, int]]:
        return [(x, y) for x, y in enumerate(self.match_left) if y >= 0]

    def validate(self, b: BipartiteGraph) -> None:
        if len(self.match_left) != b.n_left or len(self.match_right) != b.n_right:
            raise ValueError("matching does not fit the bipartite graph")
        count = 0
        for x, y in enumerate(self.match_left):
            if y < 0:
                continue
            if not (0 <= y < b.n_right) or self.match_right[y] != x:
                raise ValueError(f"left {x} and right {y} are not mutual partners")
            if y not in b.adj[x]:
                raise ValueError(f"matched pair ({x}, {y}) is not an edge")
            count += 1
        for y, x in enumerate(self.match_right):
            if x >= 0 and (not 0 <= x < b.n_left or self.match_left[x] != y):
                raise ValueError(f"right {y} and left {x} are not mutual partners")
        if count != self.size:
            raise ValueError(f"size {self.size} but {count} matched pairs")


@dataclass
class MatchingStats:
    matchings: int = 0
    searches: int = 0
    augmentations: int = 0
    per_call_searches: list[int] = field(default_factory=list)


def build_bidouble(g: Graph) -> BipartiteGraph:
    """B(G) on the live vertices of g, compacted to 0..n-1 on each side."""
    verts = g.vertices()
    index = {v: i for i, v in enumerate(verts)}
    adj = [sorted(index[u] for u in g.adj[v]) for v in verts]
    return BipartiteGraph(len(verts), len(verts), adj, verts)


def _sweep(
    b: BipartiteGraph,
    m: Matching,
    removed_left: Collection[int],
    removed_right: Collection[int],
    budget: int | None,
) -> int:
    adj, ml, mr = b.adj, m.match_left, m.match_right
    visited = bytearray(b.n_right)
    for y in removed_right:
        visited[y] = 1
    found = 0
    for root in range(b.n_left):
        if ml[root] >= 0 or root in removed_left:
            continue
        if budget is not None and found >= budget:
            break
        # iterative DFS; lefts[i] reached rights[i-1] through its matched edge
        lefts = [root]
        rights: list[int] = []
        cursor = [0]
        while lefts:
            x = lefts[-1]
            nbrs = adj[x]
            i = cursor[-1]
            advanced = False
            while i < len(nbrs):
                y = nbrs[i]
                i += 1
                if visited[y]:
                    continue
                visited[y] = 1
                cursor[-1] = i
                if mr[y] < 0:
                    rights.append(y)
                    for xx, yy in zip(lefts, rights):
                        ml[xx] = yy
                        mr[yy] = xx
                    m.size += 1
                    found += 1
                    lefts = []
                else:
                    rights.append(y)
                    lefts.append(mr[y])
                    cursor.append(0)
                advanced = True
                break
            if not advanced:
                lefts.pop()
                cursor.pop()
                if rights:
                    rights.pop()
    return found


def augment(
    b: BipartiteGraph,
    m: Matching,
    removed_left: Collection[int] = (),
    removed_right: Collection[int] = (),
    upper_bound: int | None = None,
    stats: MatchingStats | None = None,
) -> int:
    """Grow m in place to a maximum matching of b minus the removed vertices.

    Stops early once ``upper_bound`` (a known cap on the maximum size) is hit,
    which saves the final, fruitless sweep. Returns the number of sweeps.
    """
    sweeps = 0
    while upper_bound is None or m.size < upper_bound:
        budget = None if upper_bound is None else upper_bound - m.size
        sweeps += 1
        got = _sweep(b, m, removed_left, removed_right, budget)
        if stats is not None:
            stats.searches += 1
            stats.augmentations += got
        if not got:
            break
    if stats is not None:
        stats.matchings += 1
        stats.per_call_searches.append(sweeps)
    return sweeps


def max_matching(
    b: BipartiteGraph,
    warm_start: Matching | None = None,
    upper_bound: int | None = None,
    stats: MatchingStats | None = None,
) -> Matching:
    if warm_start is None:
        m = Matching.empty(b)
    else:
        warm_start.validate(b)
        m = warm_start.copy()
    if upper_bound is None:
        upper_bound = min(b.n_left, b.n_right)
    augment(b, m, upper_bound=upper_bound, stats=stats)
    return m


def independence_number_bipartite(b: BipartiteGraph, m: Matching) -> int:
    return b.n_left + b.n_right - m.size


def alternating_reach(b: BipartiteGraph, m: Matching) -> tuple[set[int], set[int]]:
    """Vertices reachable from free left vertices by alternating paths."""
    ml, mr = m.match_left, m.match_right
    zl = {x for x in range(b.n_left) if ml[x] < 0}
    zr: set[int] = set()
    stack = sorted(zl)
    while stack:
        x = stack.pop()
        for y in b.adj[x]:
            if y in zr or ml[x] == y:
                continue
            zr.add(y)
            x2 = mr[y]
            if x2 >= 0 and x2 not in zl:
                zl.add(x2)
                stack.append(x2)
    return zl, zr


def extract_mis_bipartite(b: BipartiteGraph, m: Matching) -> tuple[list[int], list[int]]:
    """Maximum independent set of b as (left ids, right ids).

    With Z the alternating reach of the free left vertices, the set is
    (left ∩ Z) ∪ (right \\ Z); the rest is a minimum vertex cover.
    """
    zl, zr = alternating_reach(b, m)
    return sorted(zl), [y for y in range(b.n_right) if y not in zr]


def min_vertex_cover_bipartite(b: BipartiteGraph, m: Matching) -> tuple[list[int], list[int]]:
    zl, zr = alternating_reach(b, m)
    return [x for x in range(b.n_left) if x not in zl], sorted(zr)

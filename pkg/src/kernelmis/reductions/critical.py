"""Critical independent set reductions.

A critical set U maximizes |U| - |N(U)|; U \\ N(U) is a critical independent
set and always extends to a maximum independent set. Both flavors work on the
bi-double graph B(G): a maximum independent set J of B(G) gives the critical
set {v : v and v' in J}, and Larson's membership test compares alpha(B(G))
with alpha of B(G) minus the closed neighborhood of {v, v'}.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from ..graph import Graph
from ..matching import (
    Matching,
    MatchingStats,
    augment,
    build_bidouble,
    extract_mis_bipartite,
    independence_number_bipartite,
    max_matching,
)
from ..trace import CriticalInclude, ReductionTrace


@dataclass(frozen=True)
class CriticalSetResult:
    critical_set: tuple[int, ...]
    independent_set: tuple[int, ...]
    difference: int


def open_neighborhood(g: Graph, s) -> set[int]:
    """Union of N(v) over s; overlaps s unless s is independent."""
    out: set[int] = set()
    for v in s:
        out |= g.adj[v]
    return out


def closed_neighborhood(g: Graph, s) -> set[int]:
    return open_neighborhood(g, s) | set(s)


def find_critical_set(g: Graph, stats: MatchingStats | None = None) -> CriticalSetResult:
    b = build_bidouble(g)
    m = max_matching(b, stats=stats)
    left, right = extract_mis_bipartite(b, m)
    both = set(left) & set(right)
    u = sorted(b.origin[i] for i in both)
    nbrs = open_neighborhood(g, u)
    ic = sorted(set(u) - nbrs)
    return CriticalSetResult(tuple(u), tuple(ic), len(u) - len(nbrs))


def apply_critical(g: Graph, s, trace: ReductionTrace) -> None:
    """Take the independent set s into the solution and delete N[s]."""
    closed = closed_neighborhood(g, s)
    g.remove_vertices(sorted(closed))
    trace.record(CriticalInclude(tuple(sorted(s)), tuple(sorted(closed))))


def reduce_critical(g: Graph, trace: ReductionTrace, stats: Counter | None = None) -> int:
    """Butenko-Trukhanov loop: strip N[I_c] until I_c comes back empty."""
    if stats is None:
        stats = Counter()
    mstats = MatchingStats()
    fired = 0
    while g.n:
        stats["critical_iterations"] += 1
        res = find_critical_set(g, mstats)
        if not res.independent_set:
            break
        apply_critical(g, res.independent_set, trace)
        stats["critical"] += 1
        fired += 1
    _merge(stats, mstats)
    return fired


class LarsonTest:
    """Membership test for "v lies in some critical independent set".

    Holds B(G) and one maximum matching of it. Each query copies that
    matching, drops the matched edges that touch N[{v, v'}] (at most
    deg(v) + deg(v') of them) and re-augments from there.

    ``commit(v)`` deletes N[{v, v'}] for good and keeps the re-augmented
    matching as the new base, so later queries answer for G - N[v].
    """

    def __init__(self, g: Graph, base: Matching | None = None, stats: MatchingStats | None = None):
        self.g = g
        self.stats = stats if stats is not None else MatchingStats()
        self.b = build_bidouble(g)
        self.index = {v: i for i, v in enumerate(self.b.origin)}
        if base is None:
            base = max_matching(self.b, stats=self.stats)
        else:
            base.validate(self.b)
        self.base = base
        self.removed: set[int] = set()  # same ids on both sides
        self.alpha = independence_number_bipartite(self.b, self.base)
        self.last_stripped = 0
        self.last_searches = 0
        self._last: tuple[int, set[int], Matching] | None = None

    def alpha_without(self, v: int) -> int:
        """alpha(B - N[{v, v'}]) for the current B, from the warm-started matching."""
        if v not in self.g or self.index[v] in self.removed:
            raise KeyError(f"vertex {v} is not a live vertex")
        i = self.index[v]
        gone = {i, *self.b.adj[i]} - self.removed
        m = self.base.copy()
        ml, mr = m.match_left, m.match_right
        stripped = 0
        for x in gone:
            y = ml[x]
            if y >= 0:
                ml[x] = mr[y] = -1
                stripped += 1
            x2 = mr[x]
            if x2 >= 0:
                ml[x2] = mr[x] = -1
                stripped += 1
        m.size -= stripped
        self.last_stripped = stripped
        out = self.removed | gone
        self.last_searches = augment(
            self.b, m, out, out, upper_bound=self.base.size, stats=self.stats
        )
        self._last = (v, gone, m)
        return 2 * (self.b.n_left - len(out)) - m.size

    def __call__(self, v: int) -> bool:
        return self.alpha == self.alpha_without(v) + 2

    def commit(self, v: int) -> None:
        """Shrink B to B - N[{v, v'}], reusing the matching from the last query on v."""
        if self._last is None or self._last[0] != v:
            self.alpha_without(v)
        _, gone, m = self._last
        self.removed |= gone
        self.base = m
        self.alpha = 2 * (self.b.n_left - len(self.removed)) - m.size
        self._last = None


def is_in_some_critical_independent_set(g: Graph, v: int, base: Matching | None = None) -> bool:
    """Larson's test. ``base``, if given, must be a maximum matching of build_bidouble(g)."""
    return LarsonTest(g, base)(v)


def max_critical_independent_set(g: Graph, stats: MatchingStats | None = None) -> list[int]:
    """Larson's algorithm in ascending id order.

    An accepted v is tested against the graph left after removing N[I] so
    far, not against G itself: two vertices can each sit in some critical
    independent set of G while no critical independent set holds both
    (the path 2-0-5-4-1-3 with v = 0, 1 is an example).
    """
    test = LarsonTest(g, stats=stats)
    chosen = []
    dropped: set[int] = set()
    for v in g.vertices():
        if v in dropped:
            continue
        if test(v):
            chosen.append(v)
            test.commit(v)
            dropped |= g.adj[v]
        dropped.add(v)
    return chosen


def reduce_max_critical(g: Graph, trace: ReductionTrace, stats: Counter | None = None) -> int:
    if stats is None:
        stats = Counter()
    mstats = MatchingStats()
    fired = 0
    while g.n:
        stats["critical_iterations"] += 1
        ic = max_critical_independent_set(g, mstats)
        if not ic:
            break
        apply_critical(g, ic, trace)
        stats["critical"] += 1
        fired += 1
    _merge(stats, mstats)
    return fired


def _merge(stats: Counter, mstats: MatchingStats) -> None:
    stats["matchings"] += mstats.matchings
    stats["searches"] += mstats.searches
    stats["augmentations"] += mstats.augmentations

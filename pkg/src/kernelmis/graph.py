"""Mutable undirected simple graphs with tombstoned vertex removal.

Vertex ids are never reused: removing a vertex clears its adjacency and marks it
dead, and new vertices are appended at the end of the id space. Reduction traces
rely on this, since they refer to ids as they were when an event was recorded.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator


class Graph:
    def __init__(self, n: int = 0, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError(f"negative vertex count {n}")
        self.adj: list[set[int]] = [set() for _ in range(n)]
        self.alive: list[bool] = [True] * n
        self.num_edges = 0
        self._num_alive = n
        for u, v in edges:
            self.add_edge(u, v)

    @property
    def capacity(self) -> int:
        """Number of ids ever allocated, dead ones included."""
        return len(self.adj)

    @property
    def n(self) -> int:
        return self._num_alive

    @property
    def m(self) -> int:
        return self.num_edges

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and 0 <= v < len(self.adj) and self.alive[v]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def _check(self, v: int) -> None:
        if not (0 <= v < len(self.adj)) or not self.alive[v]:
            raise KeyError(f"vertex {v} is not a live vertex")

    def vertices(self) -> list[int]:
        return [v for v, a in enumerate(self.alive) if a]

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, a in enumerate(self.alive):
            if a:
                for v in sorted(self.adj[u]):
                    if u < v:
                        yield u, v

    def neighbors(self, v: int) -> list[int]:
        self._check(v)
        return sorted(self.adj[v])

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < len(self.adj) and v in self.adj[u]

    def add_vertex(self) -> int:
        self.adj.append(set())
        self.alive.append(True)
        self._num_alive += 1
        return len(self.adj) - 1

    def add_edge(self, u: int, v: int) -> bool:
        """Add {u, v}; returns False if it was already present."""
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        self._check(u)
        self._check(v)
        if v in self.adj[u]:
            return False
        self.adj[u].add(v)
        self.adj[v].add(u)
        self.num_edges += 1
        return True

    def remove_edge(self, u: int, v: int) -> None:
        if v not in self.adj[u]:
            raise KeyError(f"no edge {u}-{v}")
        self.adj[u].discard(v)
        self.adj[v].discard(u)
        self.num_edges -= 1

    def remove_vertex(self, v: int) -> None:
        self._check(v)
        for u in self.adj[v]:
            self.adj[u].discard(v)
        self.num_edges -= len(self.adj[v])
        self.adj[v] = set()
        self.alive[v] = False
        self._num_alive -= 1

    def remove_vertices(self, vs: Iterable[int]) -> None:
        for v in vs:
            if self.alive[v]:
                self.remove_vertex(v)

    def copy(self) -> Graph:
        h = Graph()
        h.adj = [set(a) for a in self.adj]
        h.alive = list(self.alive)
        h.num_edges = self.num_edges
        h._num_alive = self._num_alive
        return h

    def is_independent(self, s: Iterable[int]) -> bool:
        s = set(s)
        return all(v in self and not (self.adj[v] & s) for v in s)

    def check_invariants(self) -> None:
        total = 0
        for v, nbrs in enumerate(self.adj):
            if not self.alive[v]:
                assert not nbrs, f"dead vertex {v} has neighbors"
                continue
            assert v not in nbrs, f"self-loop at {v}"
            for u in nbrs:
                assert self.alive[u], f"{v} lists dead neighbor {u}"
                assert v in self.adj[u], f"asymmetric edge {v}-{u}"
            total += len(nbrs)
        assert total == 2 * self.num_edges
        assert self._num_alive == sum(self.alive)


def connected_components(g: Graph) -> list[list[int]]:
    """Partition of the live vertices, each sorted, ordered by smallest id."""
    seen = [False] * g.capacity
    comps = []
    for s in g.vertices():
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in g.adj[v]:
                if not seen[u]:
                    seen[u] = True
                    comp.append(u)
                    queue.append(u)
        comp.sort()
        comps.append(comp)
    return comps


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, list[int]]:
    """Compacted G[s] on ids 0..|s|-1 plus the new-id -> old-id mapping."""
    mapping = sorted(set(s))
    for v in mapping:
        if v not in g:
            raise KeyError(f"vertex {v} is not a live vertex")
    index = {v: i for i, v in enumerate(mapping)}
    h = Graph(len(mapping))
    for i, v in enumerate(mapping):
        for u in g.adj[v]:
            j = index.get(u)
            if j is not None and i < j:
                h.adj[i].add(j)
                h.adj[j].add(i)
                h.num_edges += 1
    return h, mapping


def compact(g: Graph) -> tuple[Graph, list[int]]:
    return induced_subgraph(g, g.vertices())


def brute_force_mis(g: Graph, limit: int = 24) -> list[int]:
    """Exhaustive maximum independent set, used as the test oracle.

    Returns the lexicographically smallest maximum set (as a sorted list).
    Include-first branching over ascending ids enumerates equal-size sets in
    lexicographic order, so keeping only strict improvements yields it.
    """
    verts = g.vertices()
    if len(verts) > limit:
        raise ValueError(f"oracle limited to {limit} vertices, got {len(verts)}")
    index = {v: i for i, v in enumerate(verts)}
    closed = []
    for i, v in enumerate(verts):
        mask = 1 << i
        for u in g.adj[v]:
            mask |= 1 << index[u]
        closed.append(mask)

    best = [0, 0]  # size, mask

    def go(cand: int, chosen: int, size: int) -> None:
        while cand:
            if size + bin(cand).count("1") <= best[0]:
                return
            low = cand & -cand
            i = low.bit_length() - 1
            if closed[i] & cand == low:
                # no neighbor left among candidates: every extension takes it
                chosen |= low
                size += 1
                cand ^= low
                continue
            go(cand & ~closed[i], chosen | low, size + 1)
            cand ^= low
        if size > best[0]:
            best[0], best[1] = size, chosen

    go((1 << len(verts)) - 1, 0, 0)
    return [verts[i] for i in range(len(verts)) if best[1] >> i & 1]

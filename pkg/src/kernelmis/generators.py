"""Deterministic test-instance generators."""

from __future__ import annotations

import random

from .graph import Graph

PETERSEN_EDGES = [
    (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
    (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
    (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
]


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


def gnp(n: int, p: float, seed: int = 0) -> Graph:
    _need(n >= 1, f"n must be >= 1, got {n}")
    _need(0.0 <= p <= 1.0, f"p must lie in [0, 1], got {p}")
    rng = random.Random(seed)
    g = Graph(n)
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                g.add_edge(u, v)
    return g


def cycle(n: int) -> Graph:
    _need(n >= 3, f"a cycle needs n >= 3, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    _need(n >= 1, f"n must be >= 1, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def star(n: int) -> Graph:
    """K_{1,n}: center 0 joined to leaves 1..n."""
    _need(n >= 1, f"n must be >= 1, got {n}")
    return Graph(n + 1, [(0, i) for i in range(1, n + 1)])


def complete(n: int) -> Graph:
    _need(n >= 1, f"n must be >= 1, got {n}")
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def tree(n: int, seed: int = 0) -> Graph:
    """Random recursive tree."""
    _need(n >= 1, f"n must be >= 1, got {n}")
    rng = random.Random(seed)
    return Graph(n, [(rng.randrange(i), i) for i in range(1, n)])


def chordal(n: int, seed: int = 0, p_link: float = 0.5) -> Graph:
    """Random chordal graph.

    Vertex i attaches to a random subset of {j} + clique(j) for a random
    earlier j, where clique(j) is the clique j itself attached to. Subsets of
    a clique are cliques, so the reverse insertion order is a perfect
    elimination ordering.
    """
    _need(n >= 1, f"n must be >= 1, got {n}")
    rng = random.Random(seed)
    g = Graph(n)
    attached: list[list[int]] = [[]]
    for i in range(1, n):
        j = rng.randrange(i)
        pool = [j] + attached[j]
        chosen = [x for x in pool if rng.random() < p_link]
        if not chosen and rng.random() < 0.9:
            chosen = [j]
        for x in chosen:
            g.add_edge(i, x)
        attached.append(chosen)
    return g


def petersen() -> Graph:
    return Graph(10, PETERSEN_EDGES)


def generate(kind: str, *params, seed: int = 0) -> Graph:
    """Dispatch by name, e.g. ``generate("gnp", 10, 0.2, seed=3)``."""
    if kind == "gnp":
        n, p = params
        return gnp(int(n), float(p), seed)
    if kind in ("tree", "chordal"):
        (n,) = params
        return (tree if kind == "tree" else chordal)(int(n), seed)
    if kind in ("cycle", "path", "star", "complete"):
        (n,) = params
        return {"cycle": cycle, "path": path, "star": star, "complete": complete}[kind](int(n))
    if kind == "petersen":
        _need(not params, "petersen takes no parameters")
        return petersen()
    raise ValueError(f"unknown generator {kind!r}")


KINDS = ("gnp", "cycle", "path", "star", "complete", "tree", "chordal", "petersen")

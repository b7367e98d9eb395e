"""Independent brute-force checks, deliberately naive."""

from itertools import combinations

from kernelmis.graph import Graph, brute_force_mis


def alpha(g: Graph) -> int:
    return len(brute_force_mis(g))


def neighborhood(g: Graph, s) -> set:
    """N(S) as the union of N(v); may overlap S."""
    out = set()
    for v in s:
        out |= g.adj[v]
    return out


def critical_enumeration(g: Graph):
    """(max |U| - |N(U)|, list of all critical independent sets) over all subsets."""
    verts = g.vertices()
    best = 0
    scored = []
    for r in range(len(verts) + 1):
        for u in combinations(verts, r):
            n = neighborhood(g, u)
            d = len(u) - len(n)
            scored.append((d, set(u), n))
            best = max(best, d)
    cis = [u for d, u, _ in scored if d == best and not any(g.adj[x] & u for x in u)]
    return best, cis


def bipartite_as_graph(b) -> Graph:
    """Left ids 0..nl-1, right ids nl..nl+nr-1."""
    g = Graph(b.n_left + b.n_right)
    for x, y in b.edges():
        g.add_edge(x, b.n_left + y)
    return g


def max_matching_size_brute(b) -> int:
    """Try every assignment: each left vertex stays single or takes a free right."""

    def go(x, used):
        if x == b.n_left:
            return 0
        best = go(x + 1, used)
        for y in b.adj[x]:
            if y not in used:
                best = max(best, 1 + go(x + 1, used | {y}))
        return best

    return go(0, frozenset())

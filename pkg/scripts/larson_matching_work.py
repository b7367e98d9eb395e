"""Matching work for Larson's algorithm: warm-started versus from scratch.

For each graph, counts augmentation sweeps spent by the warm-started
membership tests and compares them with sum 2*deg(v), the per-test stripping
bound, and with the sweeps a from-scratch matching would need per test.

    python3 scripts/larson_matching_work.py --sizes 100 200 400
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from kernelmis import generators
from kernelmis.graph import Graph
from kernelmis.matching import MatchingStats, build_bidouble, max_matching
from kernelmis.reductions.critical import closed_neighborhood, max_critical_independent_set


@dataclass
class WorkConfig:
    sizes: tuple[int, ...] = (100, 200, 400)
    avg_degree: float = 4.0
    seed: int = 0
    scratch: bool = True


def scratch_sweeps(g: Graph, chosen: list[int]) -> int:
    """Sweeps if every test rebuilt its matching from nothing, replaying the same accepts."""
    total, remaining, accepted = 0, g.copy(), set(chosen)
    dropped: set[int] = set()
    for v in g.vertices():
        if v in dropped:
            continue
        h = remaining.copy()
        h.remove_vertices(closed_neighborhood(remaining, [v]))
        stats = MatchingStats()
        max_matching(build_bidouble(h), stats=stats)
        total += stats.searches
        if v in accepted:
            remaining.remove_vertices(closed_neighborhood(remaining, [v]))
            dropped |= g.adj[v]
        dropped.add(v)
    return total


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=list(WorkConfig.sizes))
    ap.add_argument("--avg-degree", type=float, default=WorkConfig.avg_degree)
    ap.add_argument("--seed", type=int, default=WorkConfig.seed)
    ap.add_argument("--no-scratch", action="store_true", help="skip the slow from-scratch column")
    args = ap.parse_args(argv)
    cfg = WorkConfig(tuple(args.sizes), args.avg_degree, args.seed, not args.no_scratch)

    print("n\tm\t|I|\twarm_sweeps\tbudget_sum_2deg\tscratch_sweeps\tsecs")
    for n in cfg.sizes:
        g = generators.gnp(n, min(1.0, cfg.avg_degree / (n - 1)), cfg.seed)
        stats = MatchingStats()
        t0 = time.perf_counter()
        chosen = max_critical_independent_set(g, stats)
        secs = time.perf_counter() - t0
        warm = sum(stats.per_call_searches[1:])
        bound = sum(2 * g.degree(v) for v in g.vertices())
        scratch = scratch_sweeps(g, chosen) if cfg.scratch else "-"
        print(f"{n}\t{g.m}\t{len(chosen)}\t{warm}\t{bound}\t{scratch}\t{secs:.2f}")


if __name__ == "__main__":
    main()

"""Kernel size and solve time for each strategy on a generated suite.

    python3 scripts/compare_kernels.py --csv results/kernels.csv
"""

from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import dataclass, field
from pathlib import Path

from kernelmis import generators
from kernelmis.bench import emit_table, run_bench
from kernelmis.pipeline import STRATEGIES


@dataclass
class SuiteConfig:
    gnp_sizes: tuple[int, ...] = (50, 100, 200)
    gnp_avg_degree: float = 3.0
    tree_sizes: tuple[int, ...] = (200, 1000)
    chordal_sizes: tuple[int, ...] = (100, 300)
    seeds: tuple[int, ...] = (0, 1)
    strategies: list[str] = field(default_factory=lambda: list(STRATEGIES))
    timeout: float = 60.0
    solve: bool = True


def build_suite(cfg: SuiteConfig):
    for seed in cfg.seeds:
        for n in cfg.gnp_sizes:
            p = min(1.0, cfg.gnp_avg_degree / (n - 1))
            yield f"gnp{n}-s{seed}", generators.gnp(n, p, seed)
        for n in cfg.tree_sizes:
            yield f"tree{n}-s{seed}", generators.tree(n, seed)
        for n in cfg.chordal_sizes:
            yield f"chordal{n}-s{seed}", generators.chordal(n, seed)
    yield "petersen", generators.petersen()


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--csv", help="write CSV here as well")
    ap.add_argument("--timeout", type=float, default=SuiteConfig.timeout)
    ap.add_argument("--no-solve", action="store_true")
    ap.add_argument("--seeds", type=int, default=2)
    args = ap.parse_args(argv)
    logging.basicConfig(level=logging.INFO, format="%(message)s", stream=sys.stderr)

    cfg = SuiteConfig(timeout=args.timeout, solve=not args.no_solve, seeds=tuple(range(args.seeds)))
    rows = run_bench(build_suite(cfg), cfg.strategies, cfg.timeout, cfg.solve, log=logging.info)
    if args.csv:
        Path(args.csv).parent.mkdir(parents=True, exist_ok=True)
        Path(args.csv).write_text(emit_table(rows, "csv"))
    sys.stdout.write(emit_table(rows, "pretty"))


if __name__ == "__main__":
    main()

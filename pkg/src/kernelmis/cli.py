"""Command-line entry point: kernelize, solve, bench, verify, gen.

Exit codes: 0 success, 1 solver timeout, 2 input error or invalid solution.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import generators
from .bench import emit_table, run_bench
from .graph import Graph
from .io import FORMATS, WRITERS, GraphFormatError, read_graph, read_solution, write_solution
from .pipeline import STRATEGIES, kernelize, solve_exact, verify_solution

log = logging.getLogger("kernelmis")

EXIT_OK, EXIT_TIMEOUT, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _load(path: str, fmt: str | None) -> Graph:
    try:
        return read_graph(path, fmt)
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror or e}") from None
    except GraphFormatError as e:
        raise InputError(f"{path}: {e}") from None


def _strategies(text: str) -> list[str]:
    names = list(STRATEGIES) if text == "all" else [s.strip() for s in text.split(",") if s.strip()]
    for s in names:
        if s not in STRATEGIES:
            raise InputError(f"unknown strategy {s!r}; choose from {', '.join(STRATEGIES)} or 'all'")
    return names


def _print_pairs(pairs) -> None:
    for key, value in pairs:
        print(f"{key}={value}")


def cmd_kernelize(args) -> int:
    g = _load(args.file, args.format)
    kr = kernelize(g, args.strategy)
    _print_pairs([
        ("n", g.n), ("m", g.m), ("kernel_n", kr.kernel.n), ("kernel_m", kr.kernel.m),
        ("components", kr.components), ("k_max", kr.k_max), ("offset", kr.offset),
        ("time_kernelize_s", f"{kr.time_kernelize:.2f}"),
    ])
    for key, value in sorted(kr.stats.items()):
        log.info("%s: %s", key, value)
    if args.out:
        Path(args.out).write_text(WRITERS[args.out_format](kr.kernel))
    return EXIT_OK


def cmd_solve(args) -> int:
    g = _load(args.file, args.format)
    report = solve_exact(g, args.strategy, args.timeout, args.jobs)
    kr = report.kernel
    _print_pairs([
        ("alpha", "-" if report.alpha is None else report.alpha),
        ("status", report.status),
        ("kernel_n", kr.kernel.n), ("components", kr.components), ("k_max", kr.k_max),
        ("offset", kr.offset),
        ("time_kernelize_s", f"{report.timings['kernelize']:.2f}"),
        ("time_solve_s", f"{report.timings['solve']:.2f}"),
    ])
    if report.status != "exact":
        log.warning("timed out; best independent set found has size %d", len(report.mis))
    if args.solution:
        write_solution(args.solution, report.mis)
    return EXIT_OK if report.status == "exact" else EXIT_TIMEOUT


def cmd_bench(args) -> int:
    strategies = _strategies(args.strategies)
    instances = [(Path(f).stem, _load(f, args.format)) for f in args.files]
    rows = run_bench(instances, strategies, args.timeout, not args.no_solve, args.jobs, log.info)
    if args.csv:
        Path(args.csv).write_text(emit_table(rows, "csv"))
    sys.stdout.write(emit_table(rows, args.table))
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _load(args.graph, args.format)
    try:
        s = read_solution(args.solution)
    except OSError as e:
        raise InputError(f"cannot read {args.solution}: {e.strerror or e}") from None
    except GraphFormatError as e:
        raise InputError(f"{args.solution}: {e}") from None
    verdict = verify_solution(g, s, args.claimed)
    if verdict.kind == "valid":
        print(f"valid size={len(s)}")
        return EXIT_OK
    if verdict.kind == "violation":
        u, v = verdict.edge
        print(f"violation edge={u} {v}")
    else:
        print(f"claims-mismatch {verdict.detail}")
    return EXIT_INPUT


def cmd_gen(args) -> int:
    try:
        g = generators.generate(args.kind, *args.params, seed=args.seed)
    except (TypeError, ValueError) as e:
        raise InputError(f"gen {args.kind}: {e}") from None
    text = WRITERS[args.out_format](g)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="kernelmis", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true", help="progress and stats on stderr")
    sub = p.add_subparsers(dest="command", required=True)

    def graph_opts(sp):
        sp.add_argument("--format", choices=FORMATS, help="override extension-based detection")

    sp = sub.add_parser("kernelize", help="reduce a graph to its kernel")
    sp.add_argument("file")
    sp.add_argument("--strategy", choices=list(STRATEGIES), default="simple")
    sp.add_argument("--out", help="write the compacted kernel here")
    sp.add_argument("--out-format", choices=FORMATS, default="edge-list")
    graph_opts(sp)
    sp.set_defaults(func=cmd_kernelize)

    sp = sub.add_parser("solve", help="exact maximum independent set")
    sp.add_argument("file")
    sp.add_argument("--strategy", choices=list(STRATEGIES), default="simple")
    sp.add_argument("--timeout", type=float, default=3600.0, help="seconds for the search phase")
    sp.add_argument("--solution", help="write the vertex set here, one id per line")
    sp.add_argument("--jobs", type=int, default=1, help="worker processes for kernel components")
    graph_opts(sp)
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("bench", help="compare strategies on several graphs")
    sp.add_argument("files", nargs="+")
    sp.add_argument("--strategies", default="all", help="comma list or 'all'")
    sp.add_argument("--timeout", type=float, default=3600.0)
    sp.add_argument("--csv", help="also write the table as CSV here")
    sp.add_argument("--table", choices=("csv", "tsv", "pretty"), default="pretty")
    sp.add_argument("--no-solve", action="store_true", help="kernel sizes only")
    sp.add_argument("--jobs", type=int, default=1)
    graph_opts(sp)
    sp.set_defaults(func=cmd_bench)

    sp = sub.add_parser("verify", help="check that a solution is an independent set")
    sp.add_argument("graph")
    sp.add_argument("solution")
    sp.add_argument("--claimed", type=int, help="expected solution size")
    graph_opts(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("gen", help="generate a test graph")
    sp.add_argument("kind", choices=generators.KINDS)
    sp.add_argument("params", nargs="*")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--out")
    sp.add_argument("--out-format", choices=FORMATS, default="edge-list")
    sp.set_defaults(func=cmd_gen)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_INPUT
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(message)s",
        stream=sys.stderr,
    )
    try:
        return args.func(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

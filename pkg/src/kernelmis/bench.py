"""Benchmark rows and the comparison tables built from them."""

from __future__ import annotations

import csv
import io
from dataclasses import astuple, dataclass, fields
from typing import Iterable, Sequence

from .graph import Graph
from .pipeline import SolveReport, kernelize, solve_exact


@dataclass
class BenchRow:
    name: str
    n: int
    m: int
    strategy: str
    kernel_n: int
    kernel_m: int
    components: int
    k_max: int
    offset: int
    alpha: int | None
    time_kernelize_s: float
    time_solve_s: float | None
    status: str


COLUMNS = [f.name for f in fields(BenchRow)]
_INT_COLUMNS = {"n", "m", "kernel_n", "kernel_m", "components", "k_max", "offset", "alpha"}
_FLOAT_COLUMNS = {"time_kernelize_s", "time_solve_s"}


def row_from_report(name: str, g: Graph, strategy: str, report: SolveReport) -> BenchRow:
    kr = report.kernel
    done = report.status == "exact"
    return BenchRow(
        name, g.n, g.m, strategy,
        kr.kernel.n, kr.kernel.m, kr.components, kr.k_max, kr.offset,
        report.alpha if done else None,
        round(kr.time_kernelize, 2),
        round(report.timings["solve"], 2) if done else None,
        report.status,
    )


def run_bench(
    instances: Iterable[tuple[str, Graph]],
    strategies: Sequence[str],
    timeout: float | None = 3600.0,
    solve: bool = True,
    jobs: int = 1,
    log=None,
) -> list[BenchRow]:
    rows = []
    for name, g in instances:
        for strategy in strategies:
            if log:
                log(f"{name}: {strategy}")
            if solve:
                rows.append(row_from_report(name, g, strategy, solve_exact(g, strategy, timeout, jobs)))
            else:
                kr = kernelize(g, strategy)
                rows.append(BenchRow(
                    name, g.n, g.m, strategy, kr.kernel.n, kr.kernel.m, kr.components,
                    kr.k_max, kr.offset, None, round(kr.time_kernelize, 2), None, "kernel-only",
                ))
    return rows


def _cell(column: str, value) -> str:
    if value is None:
        return "-"
    if column in _FLOAT_COLUMNS:
        return f"{value:.2f}"
    return str(value)


def _cells(row: BenchRow) -> list[str]:
    return [_cell(c, v) for c, v in zip(COLUMNS, astuple(row))]


def emit_table(rows: Sequence[BenchRow], format: str = "csv") -> str:
    """Header plus one line per row, in input order; unfinished cells print as '-'."""
    body = [COLUMNS] + [_cells(r) for r in rows]
    if format == "csv":
        return "".join(",".join(line) + "\n" for line in body)
    if format == "tsv":
        return "".join("\t".join(line) + "\n" for line in body)
    if format == "pretty":
        widths = [max(len(line[i]) for line in body) for i in range(len(COLUMNS))]
        out = []
        for line in body:
            out.append("  ".join(
                cell.ljust(w) if i in (0, 3, len(COLUMNS) - 1) else cell.rjust(w)
                for i, (cell, w) in enumerate(zip(line, widths))
            ).rstrip())
        return "\n".join(out) + "\n"
    raise ValueError(f"unknown table format {format!r}")


def read_table(text: str, format: str = "csv") -> list[BenchRow]:
    reader = csv.reader(io.StringIO(text), delimiter="," if format == "csv" else "\t")
    header = next(reader, None)
    if header != COLUMNS:
        raise ValueError(f"unexpected header {header}")
    rows = []
    for line in reader:
        values = []
        for column, cell in zip(COLUMNS, line):
            if cell == "-":
                values.append(None)
            elif column in _INT_COLUMNS:
                values.append(int(cell))
            elif column in _FLOAT_COLUMNS:
                values.append(float(cell))
            else:
                values.append(cell)
        rows.append(BenchRow(*values))
    return rows

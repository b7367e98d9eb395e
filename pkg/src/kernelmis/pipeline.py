"""Kernelize once, solve the kernel components exactly, lift the solution back."""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable

from .graph import Graph, compact, connected_components
from .reductions.advanced import reduce_advanced
from .reductions.critical import reduce_critical, reduce_max_critical
from .reductions.simple import reduce_simple
from .solver import solve
from .trace import ReductionTrace

STRATEGIES = {
    "simple": reduce_simple,
    "critical": reduce_critical,
    "maxcritical": reduce_max_critical,
    "advanced": reduce_advanced,
}


class ReconstructionError(RuntimeError):
    pass


@dataclass
class KernelResult:
    kernel: Graph
    kernel_to_working: list[int]
    trace: ReductionTrace
    strategy: str
    stats: dict = field(default_factory=dict)
    components: int = 0
    k_max: int = 0
    time_kernelize: float = 0.0

    @property
    def offset(self) -> int:
        return self.trace.offset


@dataclass
class SolveReport:
    alpha: int | None
    mis: list[int]
    status: str  # exact | timeout | kernel-only
    kernel: KernelResult
    timings: dict = field(default_factory=dict)
    nodes: int = 0


@dataclass(frozen=True)
class Verdict:
    kind: str  # valid | violation | claims-mismatch
    edge: tuple[int, int] | None = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.kind == "valid"


def kernelize(g: Graph, strategy: str = "simple") -> KernelResult:
    try:
        reduce = STRATEGIES[strategy]
    except KeyError:
        raise ValueError(f"unknown strategy {strategy!r}; choose from {', '.join(STRATEGIES)}") from None
    working = g.copy()
    trace = ReductionTrace()
    stats: Counter = Counter()
    t0 = time.perf_counter()
    reduce(working, trace, stats)
    elapsed = time.perf_counter() - t0
    kernel, mapping = compact(working)
    sizes = [len(c) for c in connected_components(kernel)]
    return KernelResult(
        kernel, mapping, trace, strategy, dict(stats), len(sizes), max(sizes, default=0), elapsed
    )


def verify_solution(g: Graph, s: Iterable[int], claimed: int | None = None) -> Verdict:
    s = list(s)
    members = set(s)
    if len(members) != len(s):
        return Verdict("claims-mismatch", detail="duplicate vertex ids in solution")
    for v in sorted(members):
        if v not in g:
            return Verdict("claims-mismatch", detail=f"vertex {v} is not in the graph")
    for v in sorted(members):
        for u in sorted(g.adj[v]):
            if u > v and u in members:
                return Verdict("violation", edge=(v, u))
    if claimed is not None and claimed != len(members):
        return Verdict("claims-mismatch", detail=f"claimed size {claimed}, set has {len(members)}")
    return Verdict("valid")


def reconstruct(trace: ReductionTrace, kernel_mis: Iterable[int], original: Graph) -> list[int]:
    """Lift an independent set given in working ids back to original ids."""
    lifted = trace.lift(kernel_mis)
    stray = [v for v in lifted if v not in original]
    if stray:
        raise ReconstructionError(f"lifted set contains non-original vertices {sorted(stray)[:5]}")
    verdict = verify_solution(original, lifted)
    if not verdict:
        raise ReconstructionError(f"lifted set is not independent: {verdict}")
    return sorted(lifted)


def solve_exact(
    g: Graph,
    strategy: str = "simple",
    timeout: float | None = None,
    jobs: int = 1,
) -> SolveReport:
    """Kernelize with ``strategy``, then branch and bound on the kernel.

    The timeout only covers the search; kernelization always runs to the end.
    """
    kr = kernelize(g, strategy)
    t0 = time.perf_counter()
    deadline = None if timeout is None else time.monotonic() + timeout
    result, _ = solve(kr.kernel, deadline, jobs)
    t1 = time.perf_counter()
    mis = reconstruct(kr.trace, [kr.kernel_to_working[i] for i in result.vertices], g)
    t2 = time.perf_counter()
    exact = result.optimal
    if exact and len(mis) != kr.offset + result.size:
        raise ReconstructionError(f"lifted size {len(mis)} != offset {kr.offset} + {result.size}")
    return SolveReport(
        len(mis) if exact else None,
        mis,
        "exact" if exact else "timeout",
        kr,
        {"kernelize": kr.time_kernelize, "solve": t1 - t0, "reconstruct": t2 - t1},
        result.nodes,
    )

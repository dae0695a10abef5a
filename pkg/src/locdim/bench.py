"""Naive search vs. block decomposition, timed side by side."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .decomposition import dim_via_decomposition
from .graph import Graph, GraphError
from .local_metric import DEFAULT_MAX_EXACT, local_metric_dimension

BRUTE = "brute"
DECOMP = "decomposition"
BENCH_METHODS = (BRUTE, DECOMP)


@dataclass
class BenchReport:
    instance: str
    n: int
    m: int
    seed: int | None
    methods: list[str] = field(default_factory=list)
    dimensions: dict[str, int] = field(default_factory=dict)
    times_us: dict[str, int] = field(default_factory=dict)
    notes: dict[str, str] = field(default_factory=dict)

    @property
    def agreement(self) -> bool:
        return len(set(self.dimensions.values())) <= 1

    def as_dict(self, timing: bool = True) -> dict:
        out = {
            "instance": self.instance,
            "n": self.n,
            "m": self.m,
            "seed": self.seed,
            "methods": self.methods,
            "dimensions": self.dimensions,
            "agreement": self.agreement,
            "notes": self.notes,
        }
        if timing:
            out["times_us"] = self.times_us
        return out


def bench_compare(
    g: Graph,
    methods: tuple[str, ...] = BENCH_METHODS,
    instance: str = "",
    seed: int | None = None,
    max_exact: int = DEFAULT_MAX_EXACT,
    threads: int = 1,
) -> BenchReport:
    """Run each method on g; failures and skips land in ``notes``, never raise."""
    report = BenchReport(instance, g.n, g.m, seed)
    for method in methods:
        if method not in BENCH_METHODS:
            report.notes[method] = "unknown method"
            continue
        if method == BRUTE and g.n > max_exact:
            report.notes[method] = f"skipped: n={g.n} exceeds exact cap {max_exact}"
            continue
        start = time.perf_counter_ns()
        try:
            if method == BRUTE:
                res = local_metric_dimension(g, max_exact=max_exact, fast_paths=False)
            else:
                res = dim_via_decomposition(g, max_exact=max_exact, threads=threads)
        except (GraphError, ValueError) as exc:
            report.notes[method] = f"failed: {exc}"
            continue
        report.times_us[method] = (time.perf_counter_ns() - start) // 1000
        report.methods.append(method)
        report.dimensions[method] = res.dimension
    return report


def format_table(reports: list[BenchReport]) -> str:
    header = f"{'instance':<28}{'n':>4}{'m':>5}{'brute':>8}{'decomp':>8}{'brute_us':>11}{'decomp_us':>11}  agree"
    lines = [header]
    for r in reports:
        def cell(key: str, table: dict) -> str:
            return str(table[key]) if key in table else "-"

        lines.append(
            f"{r.instance:<28}{r.n:>4}{r.m:>5}"
            f"{cell(BRUTE, r.dimensions):>8}{cell(DECOMP, r.dimensions):>8}"
            f"{cell(BRUTE, r.times_us):>11}{cell(DECOMP, r.times_us):>11}  {r.agreement}"
        )
    return "\n".join(lines)

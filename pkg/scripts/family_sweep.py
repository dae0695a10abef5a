"""Agreement and speed of decomposition vs. brute force over random families.

    python3 scripts/family_sweep.py --per-family 25 --seed 0 --out sweep.json
"""

import argparse
import json
import statistics
from dataclasses import asdict, dataclass, field

from locdim.bench import BRUTE, DECOMP, bench_compare
from locdim.generators import GeneratorConfig, generate


@dataclass(frozen=True)
class SweepConfig:
    families: tuple[str, ...] = ("cactus", "block-graph", "attachments", "unicyclic", "random-connected")
    per_family: int = 20
    seed: int = 0
    n: int = 18
    k: int = 6
    max_order: int = 4
    max_exact: int = 20


@dataclass
class FamilySummary:
    family: str
    instances: int = 0
    disagreements: list[str] = field(default_factory=list)
    speedups: list[float] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "family": self.family,
            "instances": self.instances,
            "disagreements": self.disagreements,
            "median_speedup": round(statistics.median(self.speedups), 2) if self.speedups else None,
        }


def sweep(cfg: SweepConfig) -> list[FamilySummary]:
    out = []
    for family in cfg.families:
        summary = FamilySummary(family)
        for i in range(cfg.per_family):
            seed = cfg.seed + i
            gen = GeneratorConfig(family, seed=seed, n=cfg.n, k=cfg.k, max_order=cfg.max_order)
            report = bench_compare(generate(gen), instance=f"{family}-{seed}", seed=seed, max_exact=cfg.max_exact)
            summary.instances += 1
            if not report.agreement:
                summary.disagreements.append(report.instance)
            t = report.times_us
            if BRUTE in t and DECOMP in t:
                summary.speedups.append(max(t[BRUTE], 1) / max(t[DECOMP], 1))
        out.append(summary)
    return out


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    d = SweepConfig()
    ap.add_argument("--families", default=",".join(d.families))
    ap.add_argument("--per-family", type=int, default=d.per_family)
    ap.add_argument("--seed", type=int, default=d.seed)
    ap.add_argument("--n", type=int, default=d.n)
    ap.add_argument("--out", help="write the summary as JSON")
    args = ap.parse_args()
    cfg = SweepConfig(tuple(args.families.split(",")), args.per_family, args.seed, args.n)
    results = [s.as_dict() for s in sweep(cfg)]
    for r in results:
        print(f"{r['family']:<18}{r['instances']:>4} instances  disagreements={len(r['disagreements'])}  median speedup={r['median_speedup']}")
    if args.out:
        with open(args.out, "w") as fh:
            json.dump({"config": asdict(cfg), "families": results}, fh, indent=2)


if __name__ == "__main__":
    main()

"""Brute force vs. block decomposition on chains of equal cliques.

Brute force grows exponentially with the chain length; the decomposition
solves each block once and stays close to linear.

    python3 scripts/chain_scaling.py --block-order 5 --max-length 10
"""

import argparse
import json
import time
from dataclasses import asdict, dataclass

from locdim.constructions import ChainSpec, chain, closed_form_block_graph, block_graph_profile
from locdim.decomposition import dim_via_decomposition
from locdim.graph import complete
from locdim.local_metric import local_metric_dimension


@dataclass(frozen=True)
class ScalingConfig:
    block_order: int = 5
    max_length: int = 10
    brute_cap: int = 20
    repeats: int = 3


def clique_chain(order: int, length: int):
    parts = (complete(order),) * length
    return chain(ChainSpec(parts, ((1, 0),) * (length - 1)))[0]


def best_time(fn, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def run(cfg: ScalingConfig) -> list[dict]:
    rows = []
    for length in range(2, cfg.max_length + 1):
        g = clique_chain(cfg.block_order, length)
        row = {
            "length": length,
            "n": g.n,
            "formula": closed_form_block_graph(block_graph_profile(g)),
            "decomposition": dim_via_decomposition(g).dimension,
            "decomposition_ms": 1000 * best_time(lambda: dim_via_decomposition(g), cfg.repeats),
        }
        if g.n <= cfg.brute_cap:
            row["brute"] = local_metric_dimension(g, max_exact=cfg.brute_cap, fast_paths=False).dimension
            row["brute_ms"] = 1000 * best_time(
                lambda: local_metric_dimension(g, max_exact=cfg.brute_cap, fast_paths=False), 1
            )
        rows.append(row)
    return rows


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    defaults = ScalingConfig()
    ap.add_argument("--block-order", type=int, default=defaults.block_order)
    ap.add_argument("--max-length", type=int, default=defaults.max_length)
    ap.add_argument("--brute-cap", type=int, default=defaults.brute_cap)
    ap.add_argument("--repeats", type=int, default=defaults.repeats)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    cfg = ScalingConfig(args.block_order, args.max_length, args.brute_cap, args.repeats)
    rows = run(cfg)
    if args.json:
        print(json.dumps({"config": asdict(cfg), "rows": rows}, indent=2))
        return
    print(f"{'len':>4}{'n':>5}{'formula':>9}{'decomp':>8}{'brute':>7}{'decomp_ms':>11}{'brute_ms':>11}")
    for r in rows:
        brute = r.get("brute", "-")
        brute_ms = f"{r['brute_ms']:.1f}" if "brute_ms" in r else "-"
        print(
            f"{r['length']:>4}{r['n']:>5}{r['formula']:>9}{r['decomposition']:>8}{brute:>7}"
            f"{r['decomposition_ms']:>11.2f}{brute_ms:>11}"
        )


if __name__ == "__main__":
    main()

"""Command-line interface: ``locdim <subcommand> ...``.

Exit status is 0 on success, 1 on usage errors and 2 when the computation
itself fails (disconnected input, search cap exceeded, bad construction).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import constructions as cons
from . import dsl
from .bench import BENCH_METHODS, DECOMP, bench_compare, format_table
from .decomposition import decompose, dim_via_decomposition
from .generators import FAMILIES, BadConfig, GeneratorConfig, generate
from .graph import Graph, GraphError, format_edge_list, parse_edge_list, require_connected
from .local_metric import (
    DEFAULT_MAX_BASES,
    DEFAULT_MAX_EXACT,
    enumerate_local_metric_bases,
    local_metric_dimension,
    rho,
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def read_graph(path: str | None = None, text: str | None = None, expr: str | None = None) -> Graph:
    """Load a graph from an edge-list file, edge-list text, or a DSL expression."""
    if expr is not None:
        base = Path(path).parent if path else Path(".")
        g = dsl.build(expr, base)
    elif path is not None:
        g = parse_edge_list(sys.stdin.read() if path == "-" else Path(path).read_text())
    elif text is not None:
        g = parse_edge_list(text)
    else:
        raise UsageError("give --input FILE or --dsl EXPR")
    return g


def _graph_from_args(args) -> Graph:
    if (args.input is None) == (args.dsl is None):
        raise UsageError("give exactly one of --input FILE or --dsl EXPR")
    g = read_graph(path=args.input) if args.input else read_graph(expr=args.dsl)
    require_connected(g)
    return g


def _threads(args) -> int:
    if getattr(args, "threads", None):
        return args.threads
    return int(os.environ.get("LOCDIM_THREADS", "1") or 1)


def _emit(args, payload: dict, text: str) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def cmd_dim(args) -> int:
    g = _graph_from_args(args)
    if args.method == "brute":
        res = local_metric_dimension(g, max_exact=args.max_exact, fast_paths=False)
    else:
        res = dim_via_decomposition(g, max_exact=args.max_exact, threads=_threads(args))
    witness = " ".join(g.label(v) for v in sorted(res.witness))
    _emit(args, res.as_dict(), f"dimension {res.dimension} ({res.method})\nwitness: {witness}")
    return 0


def cmd_decompose(args) -> int:
    g = _graph_from_args(args)
    d = decompose(g)
    lines = [f"cut vertices: {sorted(d.cut_vertices)}"]
    for j, b in enumerate(d.blocks):
        kind = "non-bipartite" if d.nonbipartite_flags[j] else "bipartite"
        lines.append(f"block {j}: {sorted(b)} {kind} C={sorted(d.attachment_sets[j])}")
    _emit(args, d.as_dict(), "\n".join(lines))
    return 0


def cmd_bases(args) -> int:
    g = _graph_from_args(args)
    fam = enumerate_local_metric_bases(g, max_bases=args.max_bases)
    bases = sorted(sorted(b) for b in fam)
    _emit(
        args,
        {"dimension": fam.dimension, "bases": bases},
        "\n".join(" ".join(map(str, b)) for b in bases),
    )
    return 0


def cmd_rho(args) -> int:
    g = _graph_from_args(args)
    try:
        c = [int(x) for x in args.constraint.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"bad --constraint {args.constraint!r}") from None
    size, witness = rho(g, c, max_exact=args.max_exact)
    _emit(
        args,
        {"rho": size, "constraint": sorted(c), "witness": sorted(witness)},
        f"rho {size}\nwitness: {' '.join(map(str, sorted(witness)))}",
    )
    return 0


def cmd_construct(args) -> int:
    g, meta = dsl.evaluate(dsl.parse(args.dsl))
    sys.stdout.write(format_edge_list(g))
    return 0


def closed_form_value(kind: str, ast, max_bases: int = DEFAULT_MAX_BASES) -> int:
    """Closed-form local metric dimension for a construction expression of the given kind."""

    def g(node):
        return dsl.evaluate(node)[0]

    if kind == "rooted":
        if isinstance(ast, dsl.RootedUniform):
            base = g(ast.base)
            return cons.closed_form_rooted_uniform(base.n, g(ast.factor), ast.root, base, max_bases)
        if isinstance(ast, dsl.Rooted):
            spec = cons.RootedSpec(g(ast.base), tuple(g(h) for h in ast.factors), ast.roots)
            return cons.closed_form_rooted(spec, max_bases)
    elif kind == "corona" and isinstance(ast, dsl.Corona):
        factors = [g(h) for h in ast.factors]
        if len(factors) == 1:
            return cons.closed_form_corona_uniform(1, factors[0], max_bases)
        return cons.closed_form_corona(factors, max_bases)
    elif kind == "block":
        return cons.closed_form_block_graph(cons.block_graph_profile(g(ast)))
    elif kind == "bouquet" and isinstance(ast, dsl.Bouquet):
        return cons.closed_form_bouquet([g(p) for p in ast.parts], list(ast.roots), max_bases)
    elif kind == "chain" and isinstance(ast, dsl.Chain):
        spec = cons.ChainSpec(tuple(g(p) for p in ast.parts), ast.links)
        return cons.closed_form_chain(spec, max_bases)
    raise UsageError(f"expression is not a {kind} construction")


def cmd_closed_form(args) -> int:
    ast = dsl.parse(args.dsl)
    value = closed_form_value(args.kind, ast, args.max_bases)
    payload = {"kind": args.kind, "closed_form": value}
    text = f"closed form: {value}"
    status = 0
    if args.verify:
        engine = dim_via_decomposition(dsl.evaluate(ast)[0], max_exact=args.max_exact).dimension
        payload["engine"] = engine
        payload["agreement"] = engine == value
        text += f"\nengine: {engine}\nagreement: {engine == value}"
        status = 0 if engine == value else 2
    _emit(args, payload, text)
    return status


def _bench_configs(args) -> list[GeneratorConfig]:
    parts = tuple(p.strip() for p in args.parts.split(";")) if args.parts else ()
    return [
        GeneratorConfig(
            args.family,
            seed=args.seed + i,
            n=args.n,
            p=args.p,
            k=args.blocks,
            max_order=args.max_order,
            parts=parts,
        )
        for i in range(args.count)
    ]


def cmd_bench(args) -> int:
    methods = BENCH_METHODS if args.compare else (DECOMP,)
    reports = []
    for cfg in _bench_configs(args):
        g = generate(cfg)
        name = f"{cfg.family}-{cfg.seed}"
        reports.append(bench_compare(g, methods, name, cfg.seed, args.max_exact, _threads(args)))
    if args.json:
        print(json.dumps([r.as_dict(timing=not args.no_timing) for r in reports], sort_keys=True))
    else:
        print(format_table(reports))
    return 0 if all(r.agreement for r in reports) else 2


def cmd_gen(args) -> int:
    (cfg,) = _bench_configs(argparse.Namespace(**{**vars(args), "count": 1}))
    sys.stdout.write(format_edge_list(generate(cfg)))
    return 0


def _graph_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", metavar="FILE", help="edge-list file ('-' for stdin)")
    p.add_argument("--dsl", metavar="EXPR", help="construction expression")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--max-exact", type=int, default=DEFAULT_MAX_EXACT)
    p.add_argument("--max-bases", type=int, default=DEFAULT_MAX_BASES)
    p.add_argument("--threads", type=int, default=None, help="parallel block solves (env LOCDIM_THREADS)")


def _family_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--p", type=float, default=0.3)
    p.add_argument("--blocks", type=int, default=3)
    p.add_argument("--max-order", type=int, default=4)
    p.add_argument("--parts", default="", help="chain-of parts as ';'-separated expressions")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="locdim", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("dim", help="local metric dimension")
    _graph_flags(p)
    p.add_argument("--method", choices=("auto", "brute", "decomp"), default="auto")
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("decompose", help="blocks, cut vertices, J_H flags and C_j sets")
    _graph_flags(p)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("bases", help="enumerate local metric bases")
    _graph_flags(p)
    p.set_defaults(func=cmd_bases)

    p = sub.add_parser("rho", help="constrained minimum for a fixed landmark set")
    _graph_flags(p)
    p.add_argument("--constraint", default="", help="comma-separated vertices, e.g. 0,3,7")
    p.set_defaults(func=cmd_rho)

    p = sub.add_parser("construct", help="evaluate an expression to an edge list")
    p.add_argument("--dsl", metavar="EXPR", required=True)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("closed-form", help="closed-form value for a construction")
    p.add_argument("--kind", choices=("rooted", "corona", "block", "bouquet", "chain"), required=True)
    p.add_argument("--dsl", metavar="EXPR", required=True)
    p.add_argument("--verify", action="store_true", help="also run the decomposition engine")
    p.add_argument("--json", action="store_true")
    p.add_argument("--max-exact", type=int, default=DEFAULT_MAX_EXACT)
    p.add_argument("--max-bases", type=int, default=DEFAULT_MAX_BASES)
    p.set_defaults(func=cmd_closed_form)

    p = sub.add_parser("bench", help="time brute force against decomposition")
    _family_flags(p)
    p.add_argument("--count", type=int, default=5)
    p.add_argument("--compare", action="store_true", help="also run whole-graph brute force")
    p.add_argument("--json", action="store_true")
    p.add_argument("--no-timing", action="store_true", help="omit timing fields from JSON")
    p.add_argument("--max-exact", type=int, default=DEFAULT_MAX_EXACT)
    p.add_argument("--threads", type=int, default=None)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("gen", help="emit a generated instance as an edge list")
    _family_flags(p)
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"locdim: {exc}", file=sys.stderr)
        return 1
    except (GraphError, dsl.DslError, BadConfig, ValueError, OSError) as exc:
        print(f"locdim: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

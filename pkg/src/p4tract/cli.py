"""Command line entry point: ``p4tract {solve,recognize,gen,bench,oracle,rules}``.

Exit codes: 0 feasible / success, 1 infeasible, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import logging
import random
import sys
import time
from collections import Counter
from pathlib import Path

from .bench import bench_rows, rows_to_csv, summarize
from .decomposition import NodeKind, is_cograph, p4_sparse_decompose
from .formats import ParseError, dump_report, format_instance, read_instance, run_report
from .generators import gnp, planted_edge, planted_vertex, random_cograph, random_spider
from .graph import GraphError
from .obstructions import all_rule_sets, find_c4, find_extended_obstruction
from .oracle import OracleSizeError, oracle_min_edge_deletion, oracle_min_vertex_deletion
from .scan import DeletionTarget
from .search import Problem, minimize, solve

log = logging.getLogger("p4tract")

EXIT_OK, EXIT_INFEASIBLE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(text: str, path: str | None) -> None:
    if path:
        Path(path).write_text(text)
    else:
        sys.stdout.write(text)


def _load(path: str):
    try:
        return read_instance(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    except (ParseError, GraphError) as exc:
        raise UsageError(f"{path}: {exc}") from None


# ---------------------------------------------------------------------------


def cmd_solve(args) -> int:
    g, _, digest = _load(args.input)
    problem = Problem(args.problem)
    start = time.perf_counter()
    if args.minimize:
        res = minimize(g, problem, threads=args.threads)
        sol, stats, k = res.solution, res.stats, "min"
        log.info("minimum k = %d", res.k)
    else:
        if args.k < 0:
            raise UsageError("--k must be non-negative")
        sol, stats = solve(g, args.k, problem, threads=args.threads)
        k = args.k
    elapsed = None if args.no_timing else time.perf_counter() - start
    report = run_report(g, problem, digest, k, sol, stats, elapsed, args.seed)
    if args.minimize:
        report["min_k"] = sol.budget_used
    _emit(dump_report(report), args.report)
    return EXIT_OK if sol.feasible else EXIT_INFEASIBLE


def recognize(g) -> dict:
    out: dict = {"n": g.n, "m": g.m}
    co = is_cograph(g)
    out["cograph"] = {"member": bool(co)}
    if not co:
        out["cograph"]["witness_p4"] = list(co.witness)
    c4 = find_c4(g)
    out["trivially_perfect"] = {"member": bool(co) and c4 is None}
    if not co:
        out["trivially_perfect"]["witness_p4"] = list(co.witness)
    elif c4 is not None:
        out["trivially_perfect"]["witness_c4"] = list(c4.embedding)
    sparse = p4_sparse_decompose(g)
    out["p4_sparse"] = {"member": bool(sparse)}
    if sparse:
        nodes = list(sparse.tree.walk())
        out["p4_sparse"]["decomposition"] = {
            "node_counts": dict(sorted(Counter(t.kind.value for t in nodes).items())),
            "spiders": [
                {
                    "kind": t.spider.kind.value,
                    "body": list(t.spider.body),
                    "feet": list(t.spider.feet),
                    "head": list(t.spider.head),
                }
                for t in nodes
                if t.kind is NodeKind.SPIDER
            ],
        }
    else:
        out["p4_sparse"]["witness"] = list(sparse.witness)
    ext = find_extended_obstruction(g)
    out["extended_p4_sparse"] = {"member": ext is None}
    if ext is not None:
        out["extended_p4_sparse"]["witness"] = {"kind": ext.kind.value, "vertices": list(ext.embedding)}
    return out


def cmd_recognize(args) -> int:
    g, _, _ = _load(args.input)
    _emit(json.dumps(recognize(g), indent=2) + "\n", None)
    return EXIT_OK


def cmd_gen(args) -> int:
    rng = random.Random(args.seed)
    comments = [f"p4tract gen --type {args.type} --n {args.n} --seed {args.seed}"]
    try:
        if args.type == "cograph":
            g = random_cograph(args.n, rng)
        elif args.type == "spider":
            g = random_spider(args.n, rng, thin=args.thin)
        elif args.type == "gnp":
            if not 0 <= args.p <= 1:
                raise UsageError("--p must lie in [0, 1]")
            g = gnp(args.n, args.p, rng)
            comments.append(f"p={args.p}")
        elif args.type == "planted-edge":
            g, added = planted_edge(args.n, args.k, rng)
            comments.append(f"planted k={args.k}")
            comments.append("added edges: " + " ".join(f"{u}-{v}" for u, v in added))
        else:
            g, extra = planted_vertex(args.n, args.k, rng)
            comments.append(f"planted k={args.k}")
            comments.append("added vertices: " + " ".join(map(str, extra)))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit(format_instance(g, comments), args.output)
    return EXIT_OK


def cmd_bench(args) -> int:
    try:
        problems = [Problem(p.strip()) for p in args.problems.split(",") if p.strip()]
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    try:
        rows = bench_rows(Path(args.corpus), problems, timing=not args.no_timing)
    except FileNotFoundError as exc:
        raise UsageError(str(exc)) from None
    _emit(rows_to_csv(rows), args.report)
    print(summarize(rows), file=sys.stderr if not args.report else sys.stdout)
    return EXIT_OK if all(r["within_bound"] for r in rows) else EXIT_INFEASIBLE


def cmd_oracle(args) -> int:
    g, _, _ = _load(args.input)
    target = DeletionTarget(args.target)
    try:
        if args.mode == "edge":
            res = oracle_min_edge_deletion(g, target)
        else:
            res = oracle_min_vertex_deletion(g, target)
    except OracleSizeError as exc:
        raise UsageError(str(exc)) from None
    out = {
        "mode": args.mode,
        "target": target.value,
        "minimum": res.minimum,
        "witness": [list(w) if isinstance(w, tuple) else w for w in res.witness],
        "explored": res.explored,
    }
    _emit(json.dumps(out, indent=2) + "\n", None)
    return EXIT_OK


def cmd_rules(args) -> int:
    out = [
        {
            "kind": rs.kind.value,
            "mode": rs.mode,
            "target": rs.target.value,
            "rules": [[list(x) if isinstance(x, tuple) else x for x in r] for r in rs.rules],
        }
        for rs in all_rule_sets()
    ]
    _emit(json.dumps(out, indent=1) + "\n", args.output)
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="p4tract", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="decide or minimize a deletion problem")
    p.add_argument("--problem", required=True, choices=[x.value for x in Problem])
    p.add_argument("--input", required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--k", type=int)
    group.add_argument("--minimize", action="store_true")
    p.add_argument("--report", help="write the JSON report here instead of stdout")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--seed", type=int, default=None, help="recorded in the report")
    p.add_argument("--no-timing", action="store_true", help="omit elapsed time for byte-stable reports")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("recognize", help="class membership with witnesses")
    p.add_argument("--input", required=True)
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("gen", help="generate a seeded instance")
    p.add_argument("--type", required=True, choices=["cograph", "spider", "gnp", "planted-edge", "planted-vertex"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--k", type=int, default=1)
    shape = p.add_mutually_exclusive_group()
    shape.add_argument("--thin", dest="thin", action="store_true", default=None)
    shape.add_argument("--thick", dest="thin", action="store_false")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="tree sizes and leaf bounds over a corpus")
    p.add_argument("--corpus", required=True)
    p.add_argument("--problems", default="cograph-edge,tp-edge,cograph-vertex,cograph-vertex-hs,tp-vertex")
    p.add_argument("--report", help="CSV output path (stdout if omitted)")
    p.add_argument("--no-timing", action="store_true")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("oracle", help="brute-force minimum, for small instances")
    p.add_argument("--input", required=True)
    p.add_argument("--mode", choices=["edge", "vertex"], required=True)
    p.add_argument("--target", choices=[t.value for t in DeletionTarget], required=True)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("rules", help="dump every synthesized branching family as JSON")
    p.add_argument("--output")
    p.set_defaults(func=cmd_rules)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    if getattr(args, "n", None) is not None and args.n < 1:
        parser.error("--n must be positive")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"p4tract: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

"""Benchmark harness: minimal k, search-tree size and leaf bound per instance."""

from __future__ import annotations

import csv
import io
import statistics
from pathlib import Path

from .formats import read_instance
from .search import Problem, leaf_bound, minimize, solve

NAIVE_OF = {
    Problem.COGRAPH_EDGE: Problem.COGRAPH_EDGE_NAIVE,
    Problem.TP_EDGE: Problem.TP_EDGE_NAIVE,
}

COLUMNS = [
    "instance",
    "problem",
    "n",
    "m",
    "min_k",
    "nodes",
    "leaves",
    "leaf_bound",
    "leaf_ratio",
    "within_bound",
    "subroutine_calls",
    "branch_nodes",
    "naive_nodes",
    "naive_leaves",
    "elapsed_s",
]


def corpus_files(corpus: Path) -> list[Path]:
    if not corpus.is_dir():
        raise FileNotFoundError(f"corpus directory {corpus} does not exist")
    files = sorted(p for p in corpus.iterdir() if p.is_file() and p.suffix == ".g")
    if not files:
        raise FileNotFoundError(f"no .g instance files in {corpus}")
    return files


def bench_rows(corpus: Path, problems: list[Problem], timing: bool = True) -> list[dict]:
    rows = []
    for path in corpus_files(corpus):
        g, _, _ = read_instance(path)
        for problem in problems:
            res = minimize(g, problem)
            bound = leaf_bound(problem, res.k)
            row = {
                "instance": path.name,
                "problem": problem.value,
                "n": g.n,
                "m": g.m,
                "min_k": res.k,
                "nodes": res.stats.nodes,
                "leaves": res.stats.leaves,
                "leaf_bound": bound,
                "leaf_ratio": round(res.stats.leaves / bound, 4),
                "within_bound": res.stats.leaves <= bound,
                "subroutine_calls": res.stats.subroutine_calls,
                "branch_nodes": sum(res.stats.branch_histogram.values()),
                "naive_nodes": "",
                "naive_leaves": "",
                "elapsed_s": round(res.elapsed, 4) if timing else "",
            }
            if problem in NAIVE_OF:
                _, naive = solve(g, res.k, NAIVE_OF[problem])
                row["naive_nodes"] = naive.nodes
                row["naive_leaves"] = naive.leaves
            rows.append(row)
    return rows


def rows_to_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=COLUMNS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def summarize(rows: list[dict]) -> str:
    lines = []
    for problem in dict.fromkeys(r["problem"] for r in rows):
        mine = [r for r in rows if r["problem"] == problem]
        worst = max(r["leaf_ratio"] for r in mine)
        broken = sum(not r["within_bound"] for r in mine)
        line = (
            f"{problem:18s} instances={len(mine):4d} max_leaf_ratio={worst:.4f} "
            f"bound_violations={broken} median_nodes={statistics.median(r['nodes'] for r in mine)}"
        )
        naive = [r["naive_nodes"] for r in mine if r["naive_nodes"] != ""]
        if naive:
            line += f" naive_median_nodes={statistics.median(naive)}"
        lines.append(line)
    return "\n".join(lines)

"""Plain-text instance files and JSON run reports.

Instance format::

    # comments start with '#'
    p <n> <m>
    <u> <v>        (m lines, 0-based ids, u != v, no duplicates)
"""

from __future__ import annotations

import hashlib
import json
from pathlib import Path
from typing import Iterable

from . import __version__
from .graph import Graph, edge
from .search import Problem, SearchStats, Solution, check_solution

SCHEMA_VERSION = 1


class ParseError(ValueError):
    pass


def parse_instance(text: str) -> tuple[Graph, list[str]]:
    """Parse an instance; returns the graph and its comment lines (without '#')."""
    comments: list[str] = []
    header = None
    es: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            comments.append(line[1:].strip())
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 3 or parts[0] != "p":
                raise ParseError(f"line {lineno}: expected header 'p <n> <m>'")
            try:
                header = (int(parts[1]), int(parts[2]))
            except ValueError:
                raise ParseError(f"line {lineno}: bad header numbers") from None
            if header[0] < 0 or header[1] < 0:
                raise ParseError(f"line {lineno}: negative header value")
            continue
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected '<u> <v>'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"line {lineno}: vertex ids must be integers") from None
        if u == v:
            raise ParseError(f"line {lineno}: self-loop {u}")
        if not (0 <= u < header[0] and 0 <= v < header[0]):
            raise ParseError(f"line {lineno}: vertex out of range 0..{header[0] - 1}")
        e = edge(u, v)
        if e in seen:
            raise ParseError(f"line {lineno}: duplicate edge {u} {v}")
        seen.add(e)
        es.append(e)
    if header is None:
        raise ParseError("missing header 'p <n> <m>'")
    if len(es) != header[1]:
        raise ParseError(f"header says {header[1]} edges, found {len(es)}")
    return Graph.from_edges(header[0], es), comments


def format_instance(g: Graph, comments: Iterable[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"p {g.n} {g.m}")
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def read_instance(path: str | Path) -> tuple[Graph, list[str], str]:
    """Graph, comments and sha256 digest of the file bytes."""
    data = Path(path).read_bytes()
    g, comments = parse_instance(data.decode("utf-8"))
    return g, comments, hashlib.sha256(data).hexdigest()


def run_report(
    g: Graph,
    problem: Problem,
    digest: str,
    k: int | str,
    solution: Solution,
    stats: SearchStats,
    elapsed: float | None,
    seed: int | None = None,
) -> dict:
    if solution.feasible and not check_solution(g, problem, solution.deletions):
        raise AssertionError("refusing to report a deletion set that does not validate")
    return {
        "schema_version": SCHEMA_VERSION,
        "tool": "p4tract",
        "version": __version__,
        "problem": problem.value,
        "input_digest": f"sha256:{digest}",
        "k": k,
        "feasible": solution.feasible,
        "budget_used": solution.budget_used,
        "deletions": [list(d) if isinstance(d, tuple) else d for d in solution.deletions],
        "stats": stats.as_dict(),
        "elapsed_s": None if elapsed is None else round(elapsed, 6),
        "seed": seed,
    }


def dump_report(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"

"""Acceptance criteria, one ``test_criterion_<n>_*`` group per criterion.

Run ``pytest tests/test_acceptance.py`` to get the per-criterion summary at
the end of the output.
"""

import itertools
import random
import time
from math import comb

import pytest

from p4tract.decomposition import p4_sparse_decompose
from p4tract.generators import gnp, make_spider, permuted, planted_edge, random_p4_sparse
from p4tract.graph import (
    Graph,
    co_components,
    complement,
    components,
    delete_edges,
    delete_vertices,
    induced,
    join,
)
from p4tract.hitting_set import HittingState, expand_hitting_set
from p4tract.obstructions import (
    ObstructionKind as K,
    find_extended_obstruction,
    find_p4_sparse_obstruction,
    synthesize_rules,
)
from p4tract.oracle import oracle_min_edge_deletion, oracle_min_vertex_deletion
from p4tract.scan import DeletionTarget, has_c4, p4_masks, satisfies
from p4tract.search import Problem, Terminal, leaf_bound, minimize, run_search, solve_cograph_edge
from p4tract.spiders import spider_edge_deletion, tp_edge_final, tp_vertex_final

P4F, TPF = DeletionTarget.P4_FREE, DeletionTarget.P4_AND_C4_FREE
MAIN = [Problem.COGRAPH_EDGE, Problem.TP_EDGE, Problem.COGRAPH_VERTEX, Problem.COGRAPH_VERTEX_HS, Problem.TP_VERTEX]

# budgets in seconds
BUDGET = {1: 1.0, 2: 10.0, 3: 600.0, 5: 300.0, 7: 60.0, 8: 300.0}


def oracle(g, problem):
    if problem.mode == "edge":
        return oracle_min_edge_deletion(g, problem.target).minimum
    return oracle_min_vertex_deletion(g, problem.target).minimum


# ---------------------------------------------------------------------------
# corpora, shared between criteria


def gnp_corpus():
    ps = (0.3, 0.5, 0.7)
    return [gnp(7, ps[i % 3], random.Random(7000 + i)) for i in range(200)]


def planted_corpus():
    return [
        (j, planted_edge(30, j, random.Random(1000 * j + i))[0])
        for j in range(1, 7)
        for i in range(50)
    ]


_minima_cache = {}


def corpus_minima():
    """minimize() on the G(7, p) corpus for all five problems, computed once."""
    if not _minima_cache:
        start = time.perf_counter()
        for idx, g in enumerate(gnp_corpus()):
            for problem in MAIN:
                _minima_cache[idx, problem] = minimize(g, problem)
        _minima_cache["elapsed"] = time.perf_counter() - start
    return _minima_cache


_planted_cache = {}


def planted_results():
    if not _planted_cache:
        start = time.perf_counter()
        for idx, (j, g) in enumerate(planted_corpus()):
            _planted_cache[idx] = (j, g, solve_cograph_edge(g, j)[0])
        _planted_cache["elapsed"] = time.perf_counter() - start
    return _planted_cache


# ---------------------------------------------------------------------------
# 1. golden tables: family size and cardinality multiset per row

GOLDEN = [
    # (kind, mode, target, reference rule cardinalities)
    (K.C5, "edge", P4F, [2] * 5),
    (K.P5, "edge", P4F, [2, 1, 1]),
    (K.CO_P5, "edge", P4F, [2, 2, 2, 2, 3, 3, 3, 3]),
    (K.PAN4, "edge", P4F, [2, 2, 2, 2, 1]),
    (K.CO_PAN4, "edge", P4F, [2, 1, 1]),
    (K.FORK, "edge", P4F, [2, 1, 1]),
    (K.KITE, "edge", P4F, [2, 3, 3, 2, 1]),
    (K.C4, "edge", TPF, [2] * 6),
    (K.C5, "vertex", P4F, [2] * 10),
    (K.P5, "vertex", P4F, [2, 1, 1, 1]),
    (K.CO_P5, "vertex", P4F, [1, 1, 1, 2]),
    (K.PAN4, "vertex", P4F, [1, 1, 1, 2]),
    (K.CO_PAN4, "vertex", P4F, [1, 1, 1, 2]),
    (K.FORK, "vertex", P4F, [1, 1, 1, 2]),
    (K.KITE, "vertex", P4F, [1, 1, 1, 2]),
    (K.C5, "vertex", TPF, [2] * 10),
    (K.P5, "vertex", TPF, [2, 1, 1, 1]),
    (K.CO_P5, "vertex", TPF, [2] * 10),
    (K.PAN4, "vertex", TPF, [1, 1, 2, 2, 2]),
    (K.CO_PAN4, "vertex", TPF, [1, 1, 1, 2]),
    (K.FORK, "vertex", TPF, [1, 1, 1, 2]),
    (K.KITE, "vertex", TPF, [1, 1, 1, 2]),
]


@pytest.mark.parametrize(
    "kind,mode,target,expected",
    GOLDEN,
    ids=[f"{k.value}-{m}-{t.name}" for k, m, t, _ in GOLDEN],
)
def test_criterion_1_golden_table_row(kind, mode, target, expected):
    got = sorted(len(r) for r in synthesize_rules(kind, mode, target).rules)
    print(f"{kind.value} {mode} {target.value}: synthesized {got}, reference {sorted(expected)}")
    assert got == sorted(expected)


def test_criterion_1_synthesis_runtime():
    synthesize_rules.cache_clear()
    start = time.perf_counter()
    for kind, mode, target, _ in GOLDEN:
        synthesize_rules(kind, mode, target)
    elapsed = time.perf_counter() - start
    print(f"synthesized {len(GOLDEN)} families in {elapsed:.3f}s")
    assert elapsed < BUDGET[1]


# ---------------------------------------------------------------------------
# 2. spider formulas


def test_criterion_2_spider_formulas():
    start = time.perf_counter()
    for size in range(2, 7):
        thin, thick = make_spider(size, True), make_spider(size, False)
        assert spider_edge_deletion(thin).cost == size - 1
        assert spider_edge_deletion(thick).cost == comb(size, 2)
        if size <= 4:
            assert oracle_min_edge_deletion(thin, P4F).minimum == size - 1
            assert oracle_min_edge_deletion(thick, P4F).minimum == comb(size, 2)
    elapsed = time.perf_counter() - start
    print(f"spider formulas checked in {elapsed:.2f}s")
    assert elapsed < BUDGET[2]


# ---------------------------------------------------------------------------
# 3. oracle equivalence


def test_criterion_3_oracle_equivalence():
    minima = corpus_minima()
    start = time.perf_counter()
    mismatches = []
    for idx, g in enumerate(gnp_corpus()):
        for problem in MAIN:
            want = oracle(g, problem)
            if minima[idx, problem].k != want:
                mismatches.append((idx, problem.value, minima[idx, problem].k, want))
    elapsed = minima["elapsed"] + time.perf_counter() - start
    print(f"200 graphs x 5 problems: {len(mismatches)} mismatches in {elapsed:.1f}s")
    assert not mismatches
    assert elapsed < BUDGET[3]


# ---------------------------------------------------------------------------
# 4. hitting-set consistency


def checked_expand(state, stats):
    assert state.consistent()
    step = expand_hitting_set(state, stats)
    if isinstance(step, Terminal) and step.deletions is not None:
        marked = {state.graph.labels[v] for v in range(state.graph.n) if state.is_marked(v)}
        assert not marked & set(step.deletions), "marked vertex in solution"
    elif not isinstance(step, Terminal):
        for child in step.children:
            assert child.consistent()
    return step


def test_criterion_4_hitting_set_consistency():
    minima = corpus_minima()
    for idx, g in enumerate(gnp_corpus()):
        hs = minima[idx, Problem.COGRAPH_VERTEX_HS]
        assert hs.k == minima[idx, Problem.COGRAPH_VERTEX].k
        # re-run the optimal budget with per-node mark checks
        found, _ = run_search(checked_expand, HittingState.initial(g, hs.k))
        assert found is not None


# ---------------------------------------------------------------------------
# 5. planted recovery


def test_criterion_5_planted_recovery():
    res = planted_results()
    failures = [(idx, j) for idx, (j, _, sol) in ((i, res[i]) for i in range(300)) if not sol.feasible]
    print(f"300 planted instances: {len(failures)} infeasible, {res['elapsed']:.1f}s")
    assert not failures
    assert res["elapsed"] < BUDGET[5]


# ---------------------------------------------------------------------------
# 6. leaf bound regression


def test_criterion_6_bounds_on_gnp_corpus():
    minima = corpus_minima()
    violations, worst = [], 0.0
    for (idx, problem), res in ((key, v) for key, v in minima.items() if key != "elapsed"):
        bound = leaf_bound(problem, res.k)
        worst = max(worst, res.stats.leaves / bound)
        if res.stats.leaves > bound:
            violations.append((idx, problem.value, res.k, res.stats.leaves, bound))
    print(f"G(7,p) corpus: worst leaves/bound = {worst:.3f}, violations {len(violations)}")
    assert not violations


def test_criterion_6_bounds_on_planted_corpus():
    violations, worst = [], 0.0
    for j, g in planted_corpus():
        res = minimize(g, Problem.COGRAPH_EDGE)
        assert res.k <= j
        bound = leaf_bound(Problem.COGRAPH_EDGE, res.k)
        worst = max(worst, res.stats.leaves / bound)
        if res.stats.leaves > bound:
            violations.append((j, res.k, res.stats.leaves, bound))
    print(f"planted corpus: worst leaves/bound = {worst:.3f}, violations {len(violations)}")
    assert not violations


# ---------------------------------------------------------------------------
# 7. structural invariants


def rule_checks(g):
    """Soundness of every applicable rule on the obstruction found in g."""
    for finder in (find_p4_sparse_obstruction, find_extended_obstruction):
        inst = finder(g)
        if inst is None:
            continue
        verts = sorted(inst.embedding)
        local = induced(g, verts)
        pos = {v: i for i, v in enumerate(verts)}
        for mode in ("edge", "vertex"):
            for target in DeletionTarget:
                try:
                    rs = synthesize_rules(inst.kind, mode, target)
                except ValueError:
                    continue
                for rule in rs.apply(inst):
                    if mode == "edge":
                        after = delete_edges(local, [(pos[u], pos[v]) for u, v in rule])
                    else:
                        after = delete_vertices(local, [pos[v] for v in rule])
                    assert satisfies(after, target), (inst.kind, mode, target, rule)
                # completeness: any local deletion reaching the target contains a rule
                universe = local.edges() if mode == "edge" else list(range(5))
                rules = [frozenset(r) for r in rs.rules]
                canon = {v: i for i, v in enumerate(inst.embedding)}
                for size in range(len(universe) + 1):
                    for sub in itertools.combinations(universe, size):
                        if mode == "edge":
                            ok = satisfies(delete_edges(local, list(sub)), target)
                            key = frozenset(tuple(sorted((canon[verts[a]], canon[verts[b]]))) for a, b in sub)
                        else:
                            ok = satisfies(delete_vertices(local, list(sub)), target)
                            key = frozenset(canon[verts[a]] for a in sub)
                        if ok:
                            assert any(r <= key for r in rules), (inst.kind, mode, target, sub)


def test_criterion_7_structural_invariants():
    start = time.perf_counter()
    rng = random.Random(77)
    for _ in range(1000):
        n = rng.randint(1, 12)
        g = gnp(n, rng.choice([0.2, 0.4, 0.6, 0.8]), rng)
        back = complement(complement(g))
        assert back.n == g.n and back.edges() == g.edges()
        for parts in (components(g), co_components(g)):
            assert sorted(v for part in parts for v in part) == list(range(n))
        rule_checks(g)
        state = HittingState.initial(g, n)
        for _ in range(3):
            if state.graph.n == 0:
                break
            v = rng.randrange(state.graph.n)
            if state.is_marked(v):
                continue
            state = state.mark([v]) if rng.random() < 0.3 else state.include([v])
            assert state.p4_sets == frozenset(p4_masks(state.graph))
            assert state.consistent()
    elapsed = time.perf_counter() - start
    print(f"1000 graphs checked in {elapsed:.1f}s")
    assert elapsed < BUDGET[7]


# ---------------------------------------------------------------------------
# 8. TP final phase


def test_criterion_8_tp_final_phase():
    start = time.perf_counter()
    rng = random.Random(88)
    edge_checked = with_c4 = 0
    for i in range(100):
        n = rng.randint(2, 9)
        if i % 2 and n >= 4:
            # join root over two random parts, so several co-components compete
            a = rng.randint(2, n - 2)
            g = permuted(join(random_p4_sparse(a, rng), random_p4_sparse(n - a, rng)), rng)
        else:
            g = random_p4_sparse(n, rng)
        assert p4_sparse_decompose(g)
        with_c4 += has_c4(g)
        sol = tp_vertex_final(g)
        assert sol.cost == oracle_min_vertex_deletion(g, TPF).minimum
        assert satisfies(delete_vertices(g, sol.deletions), TPF)
        if not has_c4(g):
            edge_checked += 1
            sol = tp_edge_final(g)
            # n <= 9, so at most 36 edges; minima are small enough to enumerate
            assert sol.cost == oracle_min_edge_deletion(g, TPF, max_m=36).minimum
            assert satisfies(delete_edges(g, sol.deletions), TPF)
    elapsed = time.perf_counter() - start
    print(f"100 P4-sparse graphs ({edge_checked} C4-free, {with_c4} with a C4) in {elapsed:.1f}s")
    assert edge_checked > 0 and with_c4 > 0
    assert elapsed < BUDGET[8]

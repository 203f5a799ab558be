"""Exit criteria.  Each test is one criterion; the terminal summary prints a
PASS/FAIL line per criterion.  All comparisons are exact."""

import random
import time

import pytest

from cocount import (
    Graph,
    LinearExtension,
    Poset,
    alpha_and_maximum_count,
    complement,
    count_is,
    count_is_by_size,
    count_is_fast,
    count_maximal_is,
    count_maximal_is_by_size,
    cover_relation,
    incomparability_graph,
    independence_polynomial_eval,
    is_table,
    is_table_fast,
    linear_extension,
    maximal_table,
    permutation_counts,
    permutation_model,
    poset_from_arcs,
)
from cocount.bench import doubling_ratios, interval_graph, interval_poset, random_intervals, run_bench
from cocount.oracle import (
    GeneratorSpec,
    enumerate_anchored,
    enumerate_is,
    random_permutation,
    random_poset,
)

DENSITIES = (0.1, 0.3, 0.5, 0.8)
SWEEP_POSETS = 1000
SWEEP_PERMS = 500
SCALING_SLACK = 3.0
BENCH_BUDGET_SECONDS = 60.0


def _sweep_instances():
    rng = random.Random(20240101)
    out = []
    for i in range(SWEEP_POSETS):
        spec = GeneratorSpec(rng.randint(1, 12), DENSITIES[i % len(DENSITIES)], rng.getrandbits(64))
        p = random_poset(spec)
        out.append((f"poset{spec}", p, None))
    for _ in range(SWEEP_PERMS):
        spec = GeneratorSpec(rng.randint(1, 12), seed=rng.getrandbits(64))
        m = permutation_model(random_permutation(spec))
        out.append((f"perm-is{spec}", m.is_poset, m.graph))
        out.append((f"perm-clique{spec}", m.clique_poset, None))
    return out


sweep_seconds = [0.0]


@pytest.fixture(scope="module")
def sweep():
    """Engine results next to brute-force results for every sweep instance."""
    start = time.perf_counter()
    rows = []
    for name, p, g in _sweep_instances():
        g_inc = incomparability_graph(p)
        le = linear_extension(p)
        ep = cover_relation(p)
        rows.append({
            "name": name,
            "p": p,
            "le": le,
            "g": g_inc if g is None else g,
            "ep": ep,
            "oracle_all": enumerate_is(g_inc, list_cap=0),
            "oracle_max": enumerate_is(g_inc, "maximal", list_cap=0),
            "profile": count_is_by_size(p, le, p.n, g_inc),
        })
    sweep_seconds[0] = time.perf_counter() - start
    return rows


@pytest.mark.acceptance("1 oracle equivalence sweep (1000 posets, 500 permutations)")
def test_oracle_equivalence_sweep(sweep):
    start = time.perf_counter()
    assert len(sweep) == SWEEP_POSETS + 2 * SWEEP_PERMS
    for row in sweep:
        p, le, ep, n = row["p"], row["le"], row["ep"], row["p"].n
        assert count_is(p, le) == row["oracle_all"].total, row["name"]
        assert count_maximal_is(ep, le) == row["oracle_max"].total, row["name"]
        assert row["profile"].counts == row["oracle_all"].size_profile(n), row["name"]
        assert count_maximal_is_by_size(ep, le, n).counts == row["oracle_max"].size_profile(n), row["name"]
    assert sweep_seconds[0] + time.perf_counter() - start < 120


def _fib(k):
    a, b = 0, 1
    for _ in range(k):
        a, b = b, a + b
    return a


@pytest.mark.acceptance("2 closed forms (chain, antichain, path)")
def test_closed_forms():
    from math import comb

    for n in range(0, 65):
        chain, anti = Poset.chain(n), Poset.antichain(n)
        le_c, le_a = linear_extension(chain), linear_extension(anti)
        assert count_is(chain, le_c) == 2 ** n
        assert count_maximal_is(cover_relation(chain), le_c) == 1
        assert count_is_by_size(chain, le_c, n).counts == tuple(comb(n, i) for i in range(n + 1))
        assert count_is(anti, le_a) == n + 1
        assert count_maximal_is(cover_relation(anti), le_a) == (n if n else 1)
    for n in range(2, 501):
        path = Poset.path(n)
        le = linear_extension(path)
        total = count_is_fast(None, path, le)
        assert total == _fib(n + 2)
        if n <= 15:
            assert total == enumerate_is(incomparability_graph(path), list_cap=0).total


@pytest.mark.acceptance("3 fast/direct a-table equality on the sweep")
def test_fast_direct_tables(sweep):
    for row in sweep:
        direct = is_table(row["p"], row["le"])
        assert is_table_fast(row["g"], row["p"], row["le"], validate=True).values == direct.values, row["name"]
        assert is_table_fast(row["g"], None, row["le"]).values == direct.values, row["name"]


@pytest.mark.acceptance("4 per-vertex anchored equality (100 posets, n <= 10)")
def test_per_vertex_anchored():
    rng = random.Random(4)
    for i in range(100):
        p = random_poset(GeneratorSpec(rng.randint(1, 10), DENSITIES[i % 4], rng.getrandbits(64)))
        le = linear_extension(p)
        a = is_table(p, le).by_element()
        b = maximal_table(cover_relation(p), le).by_element()
        for v in range(0, p.n + 2):
            assert a[v] == enumerate_anchored(p, v, list_cap=0).total, (p, v)
            assert b[v] == enumerate_anchored(p, v, "maximal", list_cap=0).total, (p, v)


def _oriented(g: Graph) -> Poset:
    """Orient every edge of ``g`` from smaller to larger position and close."""
    return poset_from_arcs(g.n, g.edges())


@pytest.mark.acceptance("5 duality (200 permutations)")
def test_duality():
    rng = random.Random(5)
    for _ in range(200):
        pi = random_permutation(GeneratorSpec(rng.randint(1, 12), seed=rng.getrandbits(64)))
        m = permutation_model(pi)
        ind, cliq = permutation_counts(m)
        assert ind == permutation_counts(permutation_model(tuple(reversed(pi))))[1], pi
        is_poset = _oriented(complement(m.graph))
        clique_poset = _oriented(m.graph)
        ident = LinearExtension.from_order(range(1, len(pi) + 1))
        assert ind == count_is(is_poset, ident), pi
        assert cliq == count_is(clique_poset, ident), pi


@pytest.mark.acceptance("6 alpha and maximum-set multiplicity on the sweep")
def test_alpha_by_product(sweep):
    for row in sweep:
        oracle = row["oracle_all"]
        assert alpha_and_maximum_count(row["profile"]) == (oracle.alpha, oracle.maximum_count), row["name"]


@pytest.mark.acceptance("7 linear scaling in modular mode (within 3x per doubling)")
def test_scaling():
    # the random family must really be cocomparability: spot-verify small instances
    for seed in range(5):
        iv = random_intervals(40, seed)
        g, p = interval_graph(iv), interval_poset(iv)
        assert incomparability_graph(p) == g
        le = LinearExtension.from_order(range(1, 41))
        assert count_is_fast(g, None, le) == count_is(p, le)

    start = time.perf_counter()
    rows = run_bench()
    elapsed = time.perf_counter() - start
    for row in rows:
        print(f"{row.family} n={row.n} m*={row.m_star} {row.seconds:.4f}s")
    assert max(r.n + r.m_star for r in rows if r.family == "interval") >= 900_000
    ratios = doubling_ratios(rows)
    assert len(ratios) == 9
    for family, n, ratio in ratios:
        assert ratio <= SCALING_SLACK, (family, n, ratio)
    assert elapsed < BENCH_BUDGET_SECONDS


@pytest.mark.acceptance("8 polynomial at x=1 is the total, at x=0 is 1")
def test_polynomial_evaluation(sweep):
    for row in sweep:
        assert independence_polynomial_eval(row["profile"], 1) == row["oracle_all"].total, row["name"]
        assert independence_polynomial_eval(row["profile"], 0) == 1, row["name"]

"""Doubling-series timings for the independent-set count in modular mode."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import Callable, Optional

from .counting import count_is_fast
from .graphs import Graph
from .posets import LinearExtension, Poset

DEFAULT_MOD = (1 << 61) - 1


@dataclass(frozen=True)
class BenchRow:
    family: str
    n: int
    m_star: int
    seconds: float
    count: int


def random_intervals(n: int, seed: int, max_len: float = 10.0) -> list[tuple[float, float]]:
    """``n`` closed intervals, sorted by left endpoint, lefts uniform on ``[0, n)``."""
    rng = random.Random(seed)
    lefts = sorted(rng.uniform(0, n) for _ in range(n))
    return [(x, x + rng.uniform(0, max_len)) for x in lefts]


def interval_graph(intervals: list[tuple[float, float]]) -> Graph:
    """Overlap graph of intervals sorted by left endpoint, in O(n + m).

    Vertex ``i`` is the ``i``-th interval, so ``1..n`` is a linear extension
    of the order "entirely to the left of".
    """
    n = len(intervals)
    adj: list[list[int]] = [[] for _ in range(n + 1)]
    for i in range(n):
        right = intervals[i][1]
        j = i + 1
        while j < n and intervals[j][0] <= right:
            adj[i + 1].append(j + 1)
            adj[j + 1].append(i + 1)
            j += 1
    return Graph.from_adjacency(n, adj)


def interval_poset(intervals: list[tuple[float, float]]) -> Poset:
    n = len(intervals)
    pred = [()] + [
        [i + 1 for i in range(n) if intervals[i][1] < intervals[v][0]] for v in range(n)
    ]
    return Poset.from_pred(n, pred)


def _best_time(fn: Callable[[], int], repeats: int) -> tuple[float, int]:
    best = float("inf")
    result = 0
    for _ in range(repeats):
        start = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - start)
    return best, result


def bench_family(family: str, n: int, mod: int, seed: int = 0, repeats: int = 3) -> BenchRow:
    le = LinearExtension.from_order(range(1, n + 1))
    if family == "chain":
        g, p, m_star = Graph.empty(n), None, 0
    elif family == "antichain":
        g, p, m_star = None, Poset.antichain(n), 0
    elif family == "interval":
        g, p = interval_graph(random_intervals(n, seed)), None
        m_star = min(g.m, g.m_bar)
    else:
        raise ValueError(f"unknown family {family!r}")
    seconds, count = _best_time(lambda: count_is_fast(g, p, le, mod), repeats)
    return BenchRow(family, n, m_star, seconds, count)


FAMILY_SIZES = {
    "chain": (10_000, 20_000, 40_000, 80_000),
    "antichain": (10_000, 20_000, 40_000, 80_000),
    "interval": (20_000, 40_000, 80_000, 160_000),
}


def run_bench(
    mod: int = DEFAULT_MOD,
    seed: int = 0,
    start: Optional[int] = None,
    steps: int = 4,
    families=("chain", "antichain", "interval"),
) -> list[BenchRow]:
    rows = []
    for family in families:
        sizes = FAMILY_SIZES[family] if start is None else [start << i for i in range(steps)]
        for n in sizes:
            rows.append(bench_family(family, n, mod, seed))
    return rows


def doubling_ratios(rows: list[BenchRow]) -> list[tuple[str, int, float]]:
    """Per consecutive pair within a family: time ratio divided by work ratio.

    A value of 1 is perfectly linear in ``n + m_star``.
    """
    out = []
    for prev, cur in zip(rows, rows[1:]):
        if prev.family != cur.family:
            continue
        work = (cur.n + cur.m_star) / (prev.n + prev.m_star)
        out.append((cur.family, cur.n, (cur.seconds / prev.seconds) / work))
    return out

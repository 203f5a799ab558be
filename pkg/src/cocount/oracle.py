"""Brute-force ground truth and reproducible random instances.

Everything here is exponential and meant for small inputs only.  The
enumerators never look at linear extensions or cover relations, so they stay
independent of the dynamic programs they are used to check.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Optional

from .errors import ElementOutOfRange, TooLarge
from .graphs import Graph
from .posets import Poset, poset_from_arcs

MAX_N = 25
LIST_CAP = 20


@dataclass(frozen=True)
class EnumerationResult:
    total: int
    by_size: tuple[int, ...]
    sets: Optional[tuple[tuple[int, ...], ...]] = None

    @property
    def alpha(self) -> int:
        return len(self.by_size) - 1

    @property
    def maximum_count(self) -> int:
        return self.by_size[-1]

    def size_profile(self, k: int) -> tuple[int, ...]:
        """``by_size`` padded with zeros (or cut) to sizes ``0..k``."""
        padded = self.by_size + (0,) * (k + 1)
        return padded[: k + 1]


def _independent_masks(n: int, nbr: list[int], maximal: bool) -> Iterator[int]:
    # vertices are bits 1..n of the mask
    stack = [(1, 0)]
    while stack:
        i, chosen = stack.pop()
        if i > n:
            if not maximal or all(
                chosen >> v & 1 or nbr[v] & chosen for v in range(1, n + 1)
            ):
                yield chosen
            continue
        stack.append((i + 1, chosen))
        if not nbr[i] & chosen:
            stack.append((i + 1, chosen | 1 << i))


def _summarize(masks: Iterator[int], n: int, list_cap: int) -> EnumerationResult:
    by_size = [0] * (n + 1)
    listed = [] if n <= list_cap else None
    for mask in masks:
        members = tuple(v for v in range(1, n + 1) if mask >> v & 1)
        by_size[len(members)] += 1
        if listed is not None:
            listed.append(members)
    while len(by_size) > 1 and by_size[-1] == 0:
        by_size.pop()
    return EnumerationResult(
        total=sum(by_size),
        by_size=tuple(by_size),
        sets=None if listed is None else tuple(sorted(listed)),
    )


def _guard(n: int) -> None:
    if n > MAX_N:
        raise TooLarge(f"brute force refuses n={n} > {MAX_N}")


def enumerate_is(g: Graph, mode: str = "all", list_cap: int = LIST_CAP) -> EnumerationResult:
    """All (or all maximal) independent sets of ``g`` by backtracking."""
    _guard(g.n)
    nbr = [0] * (g.n + 1)
    for u, v in g.edges():
        nbr[u] |= 1 << v
        nbr[v] |= 1 << u
    return _summarize(_independent_masks(g.n, nbr, mode == "maximal"), g.n, list_cap)


def enumerate_cliques(g: Graph, mode: str = "all", list_cap: int = LIST_CAP) -> EnumerationResult:
    """Cliques are independent sets of the complement; built here without graphs.complement."""
    _guard(g.n)
    full = (1 << (g.n + 1)) - 2
    nbr = [0] * (g.n + 1)
    for u, v in g.edges():
        nbr[u] |= 1 << v
        nbr[v] |= 1 << u
    anti = [0] + [full & ~nbr[v] & ~(1 << v) for v in range(1, g.n + 1)]
    return _summarize(_independent_masks(g.n, anti, mode == "maximal"), g.n, list_cap)


def enumerate_anchored(
    p: Poset, v: int, mode: str = "all", list_cap: int = LIST_CAP
) -> EnumerationResult:
    """Independent sets of the subgraph induced below ``v`` that contain ``v``.

    ``v = 0`` is the virtual bottom (only the empty set) and ``v = n + 1``
    the virtual top (every independent set of the whole graph).  With
    ``mode="maximal"`` the sets must be maximal in that subgraph.
    """
    n = p.n
    _guard(n)
    if not 0 <= v <= n + 1:
        raise ElementOutOfRange(f"element {v} outside 0..{n + 1}")
    if v == 0:
        return EnumerationResult(1, (1,), ((),))
    if v == n + 1:
        below = list(range(1, n + 1))
    else:
        below = [u for u in range(1, n + 1) if u == v or p.less(u, v)]

    def independent(s) -> bool:
        return all(p.less(x, y) or p.less(y, x) for x, y in combinations(s, 2))

    family = [
        s
        for r in range(len(below) + 1)
        for s in combinations(below, r)
        if independent(s) and (v == n + 1 or v in s)
    ]
    if mode == "maximal":
        family = [
            s for s in family
            if not any(independent(s + (w,)) for w in below if w not in s)
        ]
    by_size = [0] * (n + 1)
    for s in family:
        by_size[len(s)] += 1
    while len(by_size) > 1 and by_size[-1] == 0:
        by_size.pop()
    return EnumerationResult(
        total=len(family),
        by_size=tuple(by_size),
        sets=tuple(sorted(family)) if n <= list_cap else None,
    )


def count_chains(p: Poset) -> int:
    """Subsets of ``1..n`` whose members are pairwise comparable."""
    _guard(p.n)
    total = 0
    for mask in range(1 << p.n):
        s = [v + 1 for v in range(p.n) if mask >> v & 1]
        if all(p.comparable(x, y) for x, y in combinations(s, 2)):
            total += 1
    return total


@dataclass(frozen=True)
class GeneratorSpec:
    """``density`` is the arc probability before transitive closure, so
    the fraction of comparable pairs in the result is usually higher."""

    n: int
    density: float = 0.5
    seed: int = 0


def random_poset(spec: GeneratorSpec) -> Poset:
    rng = random.Random(spec.seed)
    labels = list(range(1, spec.n + 1))
    rng.shuffle(labels)
    arcs = [
        (labels[i], labels[j])
        for i in range(spec.n)
        for j in range(i + 1, spec.n)
        if rng.random() < spec.density
    ]
    return poset_from_arcs(spec.n, arcs)


def random_permutation(spec: GeneratorSpec) -> tuple[int, ...]:
    rng = random.Random(spec.seed)
    pi = list(range(1, spec.n + 1))
    rng.shuffle(pi)
    return tuple(pi)

"""Strict partial orders, linear extensions and the cover relation.

Elements are the integers ``1..n``.  The virtual bottom element is ``0`` and
the virtual top element is ``n + 1``; neither is ever stored in the base
``pred``/``succ`` lists.
"""

from __future__ import annotations

import heapq
from bisect import bisect_left
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional

from .errors import CycleDetected, ElementOutOfRange


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass(frozen=True)
class Poset:
    """A strict partial order on ``1..n``, stored transitively closed.

    ``pred[v]`` and ``succ[v]`` are sorted tuples; index 0 is an unused
    placeholder so that element ids index directly.
    """

    n: int
    pred: tuple[tuple[int, ...], ...]
    succ: tuple[tuple[int, ...], ...]
    comparable_pairs: int

    @classmethod
    def from_pred(cls, n: int, pred: Iterable[Iterable[int]]) -> "Poset":
        """Build from already-closed predecessor lists (``pred[0]`` ignored).

        No closure is taken; use :func:`poset_from_arcs` for raw arcs and
        :meth:`validate` when the input is not trusted.
        """
        pred_t = tuple(tuple(sorted(ps)) for ps in pred)
        if len(pred_t) != n + 1:
            raise ValueError(f"expected {n + 1} predecessor lists, got {len(pred_t)}")
        succ: list[list[int]] = [[] for _ in range(n + 1)]
        for v in range(1, n + 1):
            for u in pred_t[v]:
                succ[u].append(v)
        return cls(
            n=n,
            pred=((),) + pred_t[1:],
            succ=tuple(tuple(s) for s in succ),
            comparable_pairs=sum(len(ps) for ps in pred_t[1:]),
        )

    @classmethod
    def chain(cls, n: int) -> "Poset":
        return cls.from_pred(n, [()] + [range(1, v) for v in range(1, n + 1)])

    @classmethod
    def antichain(cls, n: int) -> "Poset":
        return cls.from_pred(n, [()] * (n + 1))

    @classmethod
    def path(cls, n: int) -> "Poset":
        """``i < j`` iff ``j - i >= 2``; its incomparability graph is the path P_n."""
        return cls.from_pred(n, [()] + [range(1, v - 1) for v in range(1, n + 1)])

    @property
    def bottom(self) -> int:
        return 0

    @property
    def top(self) -> int:
        return self.n + 1

    @cached_property
    def _pred_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(ps) for ps in self.pred)

    def less(self, u: int, v: int) -> bool:
        """``u < v`` in the extended order (``0`` is bottom, ``n + 1`` is top)."""
        n = self.n
        if u == v:
            return False
        if u == 0:
            return v != 0
        if v == n + 1:
            return u != n + 1
        if v == 0 or u == n + 1:
            return False
        ps = self.pred[v]
        i = bisect_left(ps, u)
        return i < len(ps) and ps[i] == u

    def comparable(self, u: int, v: int) -> bool:
        return self.less(u, v) or self.less(v, u)

    def arcs(self) -> list[tuple[int, int]]:
        return [(u, v) for v in range(1, self.n + 1) for u in self.pred[v]]

    def validate(self) -> None:
        """Raise ``ValueError`` unless every stored invariant holds."""
        n = self.n
        if len(self.pred) != n + 1 or len(self.succ) != n + 1:
            raise ValueError("adjacency length does not match n")
        total = 0
        sets = self._pred_sets
        for v in range(1, n + 1):
            ps = self.pred[v]
            if list(ps) != sorted(set(ps)):
                raise ValueError(f"pred[{v}] not sorted and duplicate-free")
            for u in ps:
                if not 1 <= u <= n:
                    raise ValueError(f"pred[{v}] contains out-of-range {u}")
                if u == v:
                    raise ValueError(f"irreflexivity fails at {v}")
                if v in sets[u]:
                    raise ValueError(f"antisymmetry fails at ({u}, {v})")
                if not sets[u] <= sets[v]:
                    raise ValueError(f"transitivity fails below ({u}, {v})")
            total += len(ps)
        if total != self.comparable_pairs:
            raise ValueError("comparable_pairs is stale")
        for u in range(1, n + 1):
            if list(self.succ[u]) != sorted(v for v in range(1, n + 1) if u in sets[v]):
                raise ValueError(f"succ[{u}] disagrees with pred")


def poset_from_arcs(n: int, arcs: Iterable[tuple[int, int]]) -> Poset:
    """Transitive closure of the DAG ``arcs`` on ``1..n``, as a :class:`Poset`."""
    if n < 0:
        raise ElementOutOfRange(f"negative element count {n}")
    into: list[set[int]] = [set() for _ in range(n + 1)]
    for u, v in arcs:
        for x in (u, v):
            if not 1 <= x <= n:
                raise ElementOutOfRange(f"element {x} outside 1..{n}")
        if u == v:
            raise CycleDetected([u, u])
        into[v].add(u)

    out: list[list[int]] = [[] for _ in range(n + 1)]
    indeg = [0] * (n + 1)
    for v in range(1, n + 1):
        indeg[v] = len(into[v])
        for u in into[v]:
            out[u].append(v)
    heap = [v for v in range(1, n + 1) if indeg[v] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        u = heapq.heappop(heap)
        order.append(u)
        for v in out[u]:
            indeg[v] -= 1
            if indeg[v] == 0:
                heapq.heappush(heap, v)
    if len(order) < n:
        raise CycleDetected(_find_cycle(n, into, indeg))

    below = [0] * (n + 1)
    for v in order:
        mask = 0
        for u in into[v]:
            mask |= below[u] | (1 << u)
        below[v] = mask
    return Poset.from_pred(n, [()] + [_bits(below[v]) for v in range(1, n + 1)])


def _find_cycle(n: int, into: list[set[int]], indeg: list[int]) -> list[int]:
    # every element left with positive in-degree has a predecessor also left over
    left = {v for v in range(1, n + 1) if indeg[v] > 0}
    v = min(left)
    seen: dict[int, int] = {}
    walk = []
    while v not in seen:
        seen[v] = len(walk)
        walk.append(v)
        v = min(u for u in into[v] if u in left)
    cycle = walk[seen[v]:]
    cycle.reverse()
    return cycle + [cycle[0]]


@dataclass(frozen=True)
class LinearExtension:
    order: tuple[int, ...]
    rank: tuple[int, ...]  # rank[v] is the 1-based position of v; rank[0] = 0

    @classmethod
    def from_order(cls, order: Iterable[int]) -> "LinearExtension":
        order = tuple(order)
        n = len(order)
        rank = [0] * (n + 1)
        for i, v in enumerate(order, 1):
            if not 1 <= v <= n or rank[v]:
                raise ValueError(f"order is not a permutation of 1..{n}")
            rank[v] = i
        return cls(order, tuple(rank))

    @property
    def n(self) -> int:
        return len(self.order)

    def respects(self, p: Poset) -> bool:
        rank = self.rank
        return self.n == p.n and all(
            rank[u] < rank[v] for v in range(1, p.n + 1) for u in p.pred[v]
        )


def linear_extension(p: Poset) -> LinearExtension:
    """Topological order of ``p``, ties broken by smallest element id."""
    n = p.n
    indeg = [len(ps) for ps in p.pred]
    heap = [v for v in range(1, n + 1) if indeg[v] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        u = heapq.heappop(heap)
        order.append(u)
        for v in p.succ[u]:
            indeg[v] -= 1
            if indeg[v] == 0:
                heapq.heappush(heap, v)
    return LinearExtension.from_order(order)


@dataclass(frozen=True)
class ExtendedPoset:
    """``base`` plus bottom ``0``, top ``n + 1`` and the cover relation.

    ``cover_pred`` has ``n + 2`` entries, one per element of the extension.
    """

    base: Poset
    cover_pred: tuple[tuple[int, ...], ...]

    @property
    def bottom(self) -> int:
        return 0

    @property
    def top(self) -> int:
        return self.base.n + 1

    def covers(self, u: int, v: int) -> bool:
        return u in self.cover_pred[v]

    def cover_pairs(self) -> list[tuple[int, int]]:
        return [(u, v) for v in range(len(self.cover_pred)) for u in self.cover_pred[v]]

    def base_cover_pairs(self) -> list[tuple[int, int]]:
        top = self.top
        return [(u, v) for (u, v) in self.cover_pairs() if u != 0 and v != top]


def cover_relation(p: Poset) -> ExtendedPoset:
    """Transitive reduction of ``p`` extended by bottom and top."""
    n = p.n
    cover_pred: list[tuple[int, ...]] = [()]
    for v in range(1, n + 1):
        ps = p.pred[v]
        if not ps:
            cover_pred.append((0,))
            continue
        shadowed: set[int] = set()
        for w in ps:
            shadowed.update(p.pred[w])
        cover_pred.append(tuple(u for u in ps if u not in shadowed))
    maximal = tuple(v for v in range(1, n + 1) if not p.succ[v])
    cover_pred.append(maximal if n else (0,))
    return ExtendedPoset(p, tuple(cover_pred))


@dataclass(frozen=True)
class ChainVerdict:
    is_chain: bool
    is_tight: bool
    witness: Optional[tuple[int, int]] = field(default=None)


def check_chain(p: Poset, s: Iterable[int], ep: Optional[ExtendedPoset] = None) -> ChainVerdict:
    """Is ``s`` a chain of ``p``, and is ``s`` plus bottom/top a tight chain?

    The witness is an incomparable pair when ``s`` is not a chain, and a
    consecutive non-cover pair (bottom ``0``, top ``n + 1``) when the chain is
    not tight.
    """
    elems = sorted(set(s))
    for x in elems:
        if not 1 <= x <= p.n:
            raise ElementOutOfRange(f"element {x} outside 1..{p.n}")
    for i, u in enumerate(elems):
        for v in elems[i + 1:]:
            if not p.comparable(u, v):
                return ChainVerdict(False, False, (u, v))
    if ep is None:
        ep = cover_relation(p)
    # along a chain the number of predecessors strictly increases
    chain = [0] + sorted(elems, key=lambda v: len(p.pred[v])) + [p.n + 1]
    for u, v in zip(chain, chain[1:]):
        if not ep.covers(u, v):
            return ChainVerdict(True, False, (u, v))
    return ChainVerdict(True, True)

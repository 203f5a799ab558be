"""Counting (maximal) independent sets and cliques by dynamic programming.

The incomparability graph of a poset has the chains of the poset as its
independent sets.  Each count is accumulated over a linear extension, with
bottom ``0`` seeding the recurrence and top ``n + 1`` collecting the result.

Counts are exact Python integers unless ``mod`` is given, in which case every
stored value is reduced modulo ``mod``.  In exact mode "linear time" means a
linear number of big-integer additions.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .errors import GraphPosetMismatch, InvalidExtension, KOutOfRange, SizeMismatch
from .graphs import Graph, PermutationModel, validate_orientation
from .posets import ExtendedPoset, LinearExtension, Poset, cover_relation

ALL = "all"
MAXIMAL = "maximal"
BY_SIZE = "by-size"
MAXIMAL_BY_SIZE = "maximal-by-size"
VARIANTS = (ALL, MAXIMAL, BY_SIZE, MAXIMAL_BY_SIZE)

SPOT_CHECKS = 8


@dataclass(frozen=True)
class CountTable:
    """Per-element DP values in extension order: bottom, v_1..v_n, top."""

    order: tuple[int, ...]
    values: tuple[int, ...]
    mod: Optional[int] = None

    def __getitem__(self, v: int) -> int:
        n = len(self.order)
        if v == 0:
            return self.values[0]
        if v == n + 1:
            return self.values[-1]
        return self.values[self.order.index(v) + 1]

    def by_element(self) -> dict[int, int]:
        out = {0: self.values[0], len(self.order) + 1: self.values[-1]}
        out.update(zip(self.order, self.values[1:-1]))
        return out

    @property
    def total(self) -> int:
        return self.values[-1]


@dataclass(frozen=True)
class SizeProfile:
    counts: tuple[int, ...]
    kind: str  # ALL or MAXIMAL
    mod: Optional[int] = None

    @property
    def total(self) -> int:
        s = sum(self.counts)
        return s % self.mod if self.mod else s


def _check_mod(mod: Optional[int]) -> None:
    if mod is not None and mod < 2:
        raise ValueError(f"modulus must be at least 2, got {mod}")


def _check_extension(p: Poset, le: LinearExtension) -> None:
    if le.n != p.n:
        raise InvalidExtension(f"extension has {le.n} elements, poset has {p.n}")
    rank = le.rank
    for v in range(1, p.n + 1):
        for u in p.pred[v]:
            if rank[u] >= rank[v]:
                raise InvalidExtension(f"{u} precedes {v} in the order but is ranked after it")


def _check_k(k: int, n: int) -> None:
    if not 0 <= k <= n:
        raise KOutOfRange(f"k={k} outside 0..{n}")


def _finish(order, vals, top, mod) -> CountTable:
    return CountTable(tuple(order), (1,) + tuple(vals[v] for v in order) + (top,), mod)


def is_table(p: Poset, le: LinearExtension, mod: Optional[int] = None) -> CountTable:
    """a-values by the direct recurrence: a(v) sums a(u) over u < v."""
    _check_mod(mod)
    _check_extension(p, le)
    a = [0] * (p.n + 1)
    a[0] = 1
    top = 1
    for v in le.order:
        s = 1 + sum(a[u] for u in p.pred[v])
        if mod:
            s %= mod
        a[v] = s
        top += s
    if mod:
        top %= mod
    return _finish(le.order, a, top, mod)


def count_is(p: Poset, le: LinearExtension, mod: Optional[int] = None) -> int:
    """Number of independent sets (empty set included) of the incomparability graph of ``p``."""
    return is_table(p, le, mod).total


def _spot_check(g: Graph, p: Poset, checks: int, seed: int) -> None:
    n = g.n
    if g.m + p.comparable_pairs != n * (n - 1) // 2:
        raise GraphPosetMismatch(
            f"graph has {g.m} edges but poset leaves {n * (n - 1) // 2 - p.comparable_pairs} pairs incomparable"
        )
    if n < 2:
        return
    rng = random.Random(seed)
    for _ in range(checks):
        u, v = rng.sample(range(1, n + 1), 2)
        if g.has_edge(u, v) == p.comparable(u, v):
            raise GraphPosetMismatch(f"pair ({u}, {v}) disagrees between graph and poset")


def _spot_check_extension(p: Poset, le: LinearExtension, checks: int, seed: int) -> None:
    rng = random.Random(seed)
    has_pred = [v for v in range(1, p.n + 1) if p.pred[v]]
    if not has_pred:
        return
    for _ in range(checks):
        v = rng.choice(has_pred)
        u = rng.choice(p.pred[v])
        if le.rank[u] >= le.rank[v]:
            raise InvalidExtension(f"{u} precedes {v} in the order but is ranked after it")


def is_table_fast(
    g: Optional[Graph],
    p: Optional[Poset],
    le: LinearExtension,
    mod: Optional[int] = None,
    validate: bool = False,
    seed: int = 0,
) -> CountTable:
    """a-values using O(n + min(m, m_bar)) arithmetic operations.

    When the graph is the sparser side, a running prefix sum ``t`` over all
    earlier values is corrected by subtracting the values of earlier graph
    neighbours; otherwise the poset predecessors are summed directly.

    Either ``g`` or ``p`` may be omitted when it would be too large to build;
    with ``p`` omitted, ``le`` is trusted to extend the order whose
    incomparability graph is ``g``.  ``validate=True`` compares ``g`` with
    ``p``, and ``le`` with ``p``, in full instead of by spot checks.
    """
    _check_mod(mod)
    if g is None and p is None:
        raise ValueError("need the graph, the poset, or both")
    n = g.n if g is not None else p.n
    if le.n != n:
        raise InvalidExtension(f"extension has {le.n} elements, instance has {n}")
    if g is not None and p is not None:
        if g.n != p.n:
            raise SizeMismatch(f"graph has {g.n} vertices, poset has {p.n} elements")
        if validate:
            if not validate_orientation(g, p):
                raise GraphPosetMismatch("graph is not the incomparability graph of the poset")
        else:
            _spot_check(g, p, SPOT_CHECKS, seed)
    if p is not None:
        if g is None or p.comparable_pairs < g.m:
            return is_table(p, le, mod)
        # a full extension check would cost m_bar operations
        if validate:
            _check_extension(p, le)
        else:
            _spot_check_extension(p, le, SPOT_CHECKS, seed)

    rank = le.rank
    adj = g.adj
    a = [0] * (n + 1)
    a[0] = 1
    t = 1
    for v in le.order:
        rv = rank[v]
        av = t - sum(a[u] for u in adj[v] if rank[u] < rv)
        if mod:
            av %= mod
            t = (t + av) % mod
        else:
            t += av
        a[v] = av
    return _finish(le.order, a, t, mod)


def count_is_fast(
    g: Optional[Graph],
    p: Optional[Poset],
    le: LinearExtension,
    mod: Optional[int] = None,
    validate: bool = False,
) -> int:
    return is_table_fast(g, p, le, mod, validate).total


def maximal_table(ep: ExtendedPoset, le: LinearExtension, mod: Optional[int] = None) -> CountTable:
    """b-values: like the a-values, but summed over covers only."""
    _check_mod(mod)
    _check_extension(ep.base, le)
    cover_pred = ep.cover_pred
    b = [0] * (ep.base.n + 1)
    b[0] = 1
    for v in le.order:
        s = sum(b[u] for u in cover_pred[v])
        b[v] = s % mod if mod else s
    top = sum(b[u] for u in cover_pred[ep.top])
    return _finish(le.order, b, top % mod if mod else top, mod)


def count_maximal_is(ep: ExtendedPoset, le: LinearExtension, mod: Optional[int] = None) -> int:
    return maximal_table(ep, le, mod).total


def count_is_by_size(
    p: Poset,
    le: LinearExtension,
    k: int,
    g: Optional[Graph] = None,
    mod: Optional[int] = None,
) -> SizeProfile:
    """Independent sets of each size ``0..k``.

    With ``g`` supplied and sparser than the comparabilities, one running
    prefix sum per size level is corrected over earlier graph neighbours.
    """
    _check_mod(mod)
    _check_k(k, p.n)
    use_graph = g is not None and g.m < p.comparable_pairs
    if g is not None:
        if g.n != p.n:
            raise SizeMismatch(f"graph has {g.n} vertices, poset has {p.n} elements")
        _spot_check(g, p, SPOT_CHECKS, 0)
    if use_graph:
        if le.n != p.n:
            raise InvalidExtension(f"extension has {le.n} elements, poset has {p.n}")
        _spot_check_extension(p, le, SPOT_CHECKS, 0)
    else:
        _check_extension(p, le)

    rows: list[Optional[list[int]]] = [None] * (p.n + 1)
    rows[0] = [1] + [0] * k
    running = list(rows[0])  # per-size sums over bottom and every processed element
    rank = le.rank
    for v in le.order:
        if use_graph:
            rv = rank[v]
            nbrs = [rows[u] for u in g.adj[v] if rank[u] < rv]
            row = [0] + [running[i - 1] - sum(r[i - 1] for r in nbrs) for i in range(1, k + 1)]
        else:
            below = [rows[0]] + [rows[u] for u in p.pred[v]]
            row = [0] + [sum(r[i - 1] for r in below) for i in range(1, k + 1)]
        if mod:
            row = [x % mod for x in row]
            running = [(x + y) % mod for x, y in zip(running, row)]
        else:
            running = [x + y for x, y in zip(running, row)]
        rows[v] = row
    return SizeProfile(tuple(running), ALL, mod)


def count_maximal_is_by_size(
    ep: ExtendedPoset, le: LinearExtension, k: int, mod: Optional[int] = None
) -> SizeProfile:
    _check_mod(mod)
    _check_k(k, ep.base.n)
    _check_extension(ep.base, le)
    rows: list[Optional[list[int]]] = [None] * (ep.base.n + 1)
    rows[0] = [1] + [0] * k
    for v in le.order:
        below = [rows[u] for u in ep.cover_pred[v]]
        row = [0] + [sum(r[i - 1] for r in below) for i in range(1, k + 1)]
        rows[v] = [x % mod for x in row] if mod else row
    below = [rows[u] for u in ep.cover_pred[ep.top]]
    top = [sum(r[i] for r in below) for i in range(k + 1)]
    if mod:
        top = [x % mod for x in top]
    return SizeProfile(tuple(top), MAXIMAL, mod)


def alpha_and_maximum_count(profile: SizeProfile) -> tuple[int, int]:
    """Independence number and the number of maximum independent sets."""
    if profile.kind != ALL:
        raise ValueError("need an all-sets profile")
    if profile.mod:
        raise ValueError("a modular profile cannot locate its last nonzero count")
    alpha = max(i for i, c in enumerate(profile.counts) if c > 0)
    return alpha, profile.counts[alpha]


Number = Union[int, Fraction]


def independence_polynomial_eval(profile: SizeProfile, x: Number) -> Number:
    value: Number = 0
    for c in reversed(profile.counts):
        value = value * x + c
    if profile.mod and isinstance(value, int):
        value %= profile.mod
    return value


def _dispatch(p, le, variant, k, mod, g=None):
    if variant == ALL:
        return count_is_fast(g, p, le, mod)
    if variant == MAXIMAL:
        return count_maximal_is(cover_relation(p), le, mod)
    if variant == BY_SIZE:
        return count_is_by_size(p, le, p.n if k is None else k, g, mod)
    if variant == MAXIMAL_BY_SIZE:
        return count_maximal_is_by_size(cover_relation(p), le, p.n if k is None else k, mod)
    raise ValueError(f"unknown variant {variant!r}; expected one of {VARIANTS}")


def count_cliques(
    p: Poset,
    le: LinearExtension,
    variant: str = ALL,
    k: Optional[int] = None,
    mod: Optional[int] = None,
):
    """Cliques of the comparability graph of ``p``.

    Cliques of the comparability graph are the chains of ``p``, which are
    the independent sets of its incomparability graph, so this runs the
    independent-set count on the same poset.
    """
    return _dispatch(p, le, variant, k, mod)


def permutation_counts(
    model: PermutationModel,
    variant: str = ALL,
    k: Optional[int] = None,
    mod: Optional[int] = None,
):
    """``(independent sets, cliques)`` of the permutation graph."""
    # i < j in either poset forces i < j as integers
    le = LinearExtension.from_order(range(1, model.n + 1))
    return (
        _dispatch(model.is_poset, le, variant, k, mod, g=model.graph),
        count_cliques(model.clique_poset, le, variant, k, mod),
    )

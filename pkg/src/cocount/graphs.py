"""Undirected graphs and their links to posets and permutations."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import ElementOutOfRange, NotAPermutation, SizeMismatch
from .posets import Poset


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on ``1..n``; ``adj[0]`` is an unused placeholder."""

    n: int
    adj: tuple[tuple[int, ...], ...]
    m: int

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        nbrs: list[set[int]] = [set() for _ in range(n + 1)]
        for u, v in edges:
            for x in (u, v):
                if not 1 <= x <= n:
                    raise ElementOutOfRange(f"vertex {x} outside 1..{n}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls.from_adjacency(n, nbrs)

    @classmethod
    def from_adjacency(cls, n: int, adj: Sequence[Iterable[int]]) -> "Graph":
        """Trusts ``adj`` to be symmetric and loop-free."""
        adj_t = ((),) + tuple(tuple(sorted(a)) for a in adj[1:])
        return cls(n, adj_t, sum(len(a) for a in adj_t) // 2)

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, ((),) * (n + 1), 0)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return complement(cls.empty(n))

    @property
    def m_bar(self) -> int:
        return self.n * (self.n - 1) // 2 - self.m

    @property
    def m_star(self) -> int:
        return min(self.m, self.m_bar)

    @cached_property
    def _adj_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(a) for a in self.adj)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj_sets[u]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(1, self.n + 1) for v in self.adj[u] if u < v]

    def is_independent(self, s: Iterable[int]) -> bool:
        s = list(s)
        return all(not self.has_edge(u, v) for i, u in enumerate(s) for v in s[i + 1:])


def complement(g: Graph) -> Graph:
    n = g.n
    adj = [()] + [
        [u for u in range(1, n + 1) if u != v and u not in g._adj_sets[v]]
        for v in range(1, n + 1)
    ]
    return Graph.from_adjacency(n, adj)


def incomparability_graph(p: Poset) -> Graph:
    n = p.n
    adj = [()]
    for v in range(1, n + 1):
        related = set(p.pred[v])
        related.update(p.succ[v])
        related.add(v)
        adj.append([u for u in range(1, n + 1) if u not in related])
    return Graph.from_adjacency(n, adj)


def comparability_graph(p: Poset) -> Graph:
    adj = [()] + [p.pred[v] + p.succ[v] for v in range(1, p.n + 1)]
    return Graph.from_adjacency(p.n, adj)


def validate_orientation(g: Graph, p: Poset) -> bool:
    """True iff ``g`` is exactly the incomparability graph of ``p``.

    To validate a transitive orientation of a comparability graph ``h``,
    pass ``complement(h)``.
    """
    if g.n != p.n:
        raise SizeMismatch(f"graph has {g.n} vertices, poset has {p.n} elements")
    if g.m + p.comparable_pairs != g.n * (g.n - 1) // 2:
        return False
    return all(not (p.less(u, v) or p.less(v, u)) for u, v in g.edges())


@dataclass(frozen=True)
class PermutationModel:
    """A permutation with its inversion graph and the two posets realizing it.

    ``is_poset`` orders the non-inversions (its chains are the independent
    sets of ``graph``); ``clique_poset`` orders the inversions (its chains
    are the cliques).
    """

    pi: tuple[int, ...]
    graph: Graph
    is_poset: Poset
    clique_poset: Poset

    @property
    def n(self) -> int:
        return len(self.pi)


def _check_permutation(pi: Sequence[int]) -> tuple[int, ...]:
    pi = tuple(pi)
    n = len(pi)
    if sorted(pi) != list(range(1, n + 1)):
        raise NotAPermutation(f"{pi!r} is not a permutation of 1..{n}")
    return pi


def permutation_model(pi: Sequence[int]) -> PermutationModel:
    pi = _check_permutation(pi)
    n = len(pi)
    val = (0,) + pi
    lower: list[list[int]] = [[]]
    higher: list[list[int]] = [[]]
    for j in range(1, n + 1):
        lower.append([i for i in range(1, j) if val[i] < val[j]])
        higher.append([i for i in range(1, j) if val[i] > val[j]])
    adj: list[list[int]] = [[] for _ in range(n + 1)]
    for j in range(1, n + 1):
        for i in higher[j]:
            adj[i].append(j)
            adj[j].append(i)
    return PermutationModel(
        pi=pi,
        graph=Graph.from_adjacency(n, adj),
        is_poset=Poset.from_pred(n, lower),
        clique_poset=Poset.from_pred(n, higher),
    )


def reverse_permutation(pi: Sequence[int]) -> tuple[int, ...]:
    """Positions reversed; the inversion graph becomes its complement with
    vertex ``i`` renamed ``n + 1 - i``."""
    return tuple(reversed(_check_permutation(pi)))


def complement_permutation(pi: Sequence[int]) -> tuple[int, ...]:
    """Values reflected; the inversion graph becomes its complement on the same vertices."""
    pi = _check_permutation(pi)
    return tuple(len(pi) + 1 - x for x in pi)

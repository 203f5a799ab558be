"""Plain-text instance formats.

poset::

    # comments start with '#'
    poset <n> <arc-count>
    a <u> <v>          # u precedes v; arcs need not be closed

perm::

    perm <n>
    <pi_1> <pi_2> ... <pi_n>   # may wrap over several lines

graph::

    graph <n> <m>
    e <u> <v>
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterator, Union

from .errors import NotAPermutation, ParseError
from .graphs import Graph, _check_permutation
from .posets import Poset, cover_relation, poset_from_arcs

FORMATS = ("poset", "perm", "graph")


def _lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def _ints(lineno: int, words: list[str]) -> list[int]:
    try:
        return [int(w) for w in words]
    except ValueError:
        raise ParseError(lineno, f"expected integers, got {' '.join(words)!r}") from None


def _header(lines, keyword: str, fields: int) -> list[int]:
    try:
        lineno, words = next(lines)
    except StopIteration:
        raise ParseError(0, f"empty input, expected '{keyword}' header") from None
    if words[0] != keyword or len(words) != fields + 1:
        raise ParseError(lineno, f"expected header '{keyword}' followed by {fields} integers")
    values = _ints(lineno, words[1:])
    if any(x < 0 for x in values):
        raise ParseError(lineno, "header values must be nonnegative")
    return values


def _pairs(lines, tag: str, n: int, expected: int) -> list[tuple[int, int]]:
    pairs = []
    lineno = 0
    for lineno, words in lines:
        if words[0] != tag or len(words) != 3:
            raise ParseError(lineno, f"expected '{tag} <u> <v>'")
        u, v = _ints(lineno, words[1:])
        if not (1 <= u <= n and 1 <= v <= n):
            raise ParseError(lineno, f"id outside 1..{n}")
        pairs.append((u, v))
    if len(pairs) != expected:
        raise ParseError(lineno, f"header announced {expected} lines, found {len(pairs)}")
    return pairs


def parse_poset(text: str) -> Poset:
    lines = _lines(text)
    n, count = _header(lines, "poset", 2)
    arcs = _pairs(lines, "a", n, count)
    return poset_from_arcs(n, arcs)


def parse_perm(text: str) -> tuple[int, ...]:
    lines = _lines(text)
    (n,) = _header(lines, "perm", 1)
    values: list[int] = []
    lineno = 0
    for lineno, words in lines:
        values.extend(_ints(lineno, words))
    if len(values) != n:
        raise ParseError(lineno, f"header announced {n} values, found {len(values)}")
    try:
        return _check_permutation(values)
    except NotAPermutation as exc:
        raise ParseError(lineno, str(exc)) from exc


def parse_graph(text: str) -> Graph:
    lines = _lines(text)
    n, m = _header(lines, "graph", 2)
    edges = _pairs(lines, "e", n, m)
    for u, v in edges:
        if u == v:
            raise ParseError(0, f"self-loop at {u}")
    g = Graph.from_edges(n, edges)
    if g.m != m:
        raise ParseError(0, f"duplicate edges: {m} lines but {g.m} distinct edges")
    return g


def dump_poset(p: Poset) -> str:
    """Writes the cover arcs only; parsing closes them again."""
    arcs = cover_relation(p).base_cover_pairs()
    return "".join([f"poset {p.n} {len(arcs)}\n"] + [f"a {u} {v}\n" for u, v in sorted(arcs)])


def dump_perm(pi) -> str:
    return f"perm {len(pi)}\n" + " ".join(map(str, pi)) + "\n"


def dump_graph(g: Graph) -> str:
    return "".join([f"graph {g.n} {g.m}\n"] + [f"e {u} {v}\n" for u, v in g.edges()])


_PARSERS = {"poset": parse_poset, "perm": parse_perm, "graph": parse_graph}


def load(path: Union[str, Path], fmt: str):
    return _PARSERS[fmt](Path(path).read_text())

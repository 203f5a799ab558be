import pytest

from cocount import CycleDetected, Graph, Poset
from cocount.errors import ParseError
from cocount.formats import dump_graph, dump_perm, dump_poset, parse_graph, parse_perm, parse_poset
from cocount.oracle import GeneratorSpec, random_permutation, random_poset


def test_parse_poset_with_comments():
    text = "# a chain\nposet 3 2\na 1 2  # first\n\na 2 3\n"
    assert parse_poset(text) == Poset.chain(3)


@pytest.mark.parametrize("text, lineno", [
    ("", 0),
    ("poset 3\n", 1),
    ("poset 3 1\nb 1 2\n", 2),
    ("poset 3 1\na 1 x\n", 2),
    ("poset 3 1\na 1 4\n", 2),
    ("poset 3 2\na 1 2\n", 2),
])
def test_parse_poset_errors(text, lineno):
    with pytest.raises(ParseError) as info:
        parse_poset(text)
    assert info.value.lineno == lineno


def test_parse_poset_cycle():
    with pytest.raises(CycleDetected):
        parse_poset("poset 2 2\na 1 2\na 2 1\n")


def test_parse_perm():
    assert parse_perm("perm 4\n2 1\n4 3\n") == (2, 1, 4, 3)
    with pytest.raises(ParseError):
        parse_perm("perm 3\n1 2\n")
    with pytest.raises(ParseError):
        parse_perm("perm 2\n1 1\n")


def test_parse_graph():
    g = parse_graph("graph 4 3\ne 1 2\ne 2 3\ne 3 4\n")
    assert g == Graph.from_edges(4, [(1, 2), (2, 3), (3, 4)])
    with pytest.raises(ParseError):
        parse_graph("graph 2 2\ne 1 2\ne 2 1\n")


@pytest.mark.parametrize("seed", range(10))
def test_round_trip(seed):
    spec = GeneratorSpec(9, 0.3, seed)
    p = random_poset(spec)
    assert parse_poset(dump_poset(p)) == p
    pi = random_permutation(spec)
    assert parse_perm(dump_perm(pi)) == pi
    g = Graph.from_edges(5, [(1, 2), (4, 5)])
    assert parse_graph(dump_graph(g)) == g

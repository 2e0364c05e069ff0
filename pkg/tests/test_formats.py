import pytest
from hypothesis import given, settings, strategies as st

from injcolor.conflict import Coloring
from injcolor.formats import ParseError, emit_coloring, emit_edge_list, graph_digest, parse_coloring, parse_edge_list
from injcolor.generators import gen_random_graph
from injcolor.graph import Graph


def test_triangle():
    g = parse_edge_list("p inj 3 3\ne 1 2\ne 2 3\ne 1 3\n")
    assert g.edges() == [(0, 1), (0, 2), (1, 2)]


def test_isolated_vertices():
    g = parse_edge_list("p inj 2 0\n")
    assert g.order == 2 and g.size == 0


def test_comments_and_blank_lines():
    g = parse_edge_list("c hello\n\np inj 2 1\nc mid\ne 2 1\n")
    assert g.edges() == [(0, 1)]


@pytest.mark.parametrize(
    "text, line, needle",
    [
        ("p inj 3 1\ne 1 5\n", 2, "out of range"),
        ("p inj 3 2\ne 1 2\ne 2 1\n", 3, "duplicate"),
        ("p inj 3 1\ne 2 2\n", 2, "loop"),
        ("p edge 3 1\n", 1, "malformed header"),
        ("p inj 3\n", 1, "malformed header"),
        ("e 1 2\np inj 2 1\n", 1, "before header"),
        ("p inj 2 1\np inj 2 1\n", 2, "second header"),
        ("p inj 2 1\ne 1 x\n", 2, "not an integer"),
        ("p inj 2 1\nx 1 2\n", 2, "unknown line"),
        ("c only\np inj 3 2\ne 1 2\n", 2, "declares 2 edges"),
    ],
)
def test_errors_carry_line_numbers(text, line, needle):
    with pytest.raises(ParseError) as info:
        parse_edge_list(text)
    assert info.value.line == line
    assert needle in str(info.value)


def test_missing_header():
    with pytest.raises(ParseError):
        parse_edge_list("c nothing\n")


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 20), st.integers(0, 40), st.integers(0, 10**6))
def test_round_trip(n, m, seed):
    g = gen_random_graph(n, m, seed) if n else Graph()
    text = emit_edge_list(g, ["generated"])
    h = parse_edge_list(text)
    assert h == g
    assert emit_edge_list(h, ["generated"]) == text
    assert graph_digest(h) == graph_digest(g)


def test_emit_relabels():
    g = Graph([5, 9], [(5, 9)])
    assert emit_edge_list(g) == "p inj 2 1\ne 1 2\n"


def test_coloring_round_trip():
    col = Coloring(3, {(0, 1): 1, (1, 2): 3})
    text = emit_coloring(col)
    assert text == "1 2 1\n2 3 3\n"
    back = parse_coloring(text)
    assert back == col and back.k == 3
    assert parse_coloring("# note\n3 2 3\n", k=5).k == 5


def test_coloring_errors():
    with pytest.raises(ParseError) as info:
        parse_coloring("1 2 1\n2 1 2\n")
    assert info.value.line == 2
    with pytest.raises(ParseError):
        parse_coloring("1 2\n")
    with pytest.raises(ParseError):
        parse_coloring("0 2 1\n")

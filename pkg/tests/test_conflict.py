import random

import pytest
from hypothesis import given, settings, strategies as st

from injcolor.conflict import Coloring, available_colors, build_conflict_graph, sees, seen_by, validate
from injcolor.generators import gen_random_graph
from injcolor.graph import Graph, GraphError
from oracles import sees_line_graph


def cycle(n):
    return Graph(range(n), [(i, (i + 1) % n) for i in range(n)])


def test_triangle_edges_all_see():
    g = cycle(3)
    assert sees(g, (0, 1), (1, 2))
    assert build_conflict_graph(g).num_conflicts == 3


def test_adjacent_without_triangle():
    g = Graph(range(3), [(0, 1), (1, 2)])
    assert not sees(g, (0, 1), (1, 2))


def test_distance_two():
    g = Graph(range(4), [(0, 1), (1, 2), (2, 3)])
    assert sees(g, (0, 1), (2, 3))
    assert seen_by(g, (0, 1)) == {(2, 3)}


def test_self_is_rejected():
    with pytest.raises(GraphError):
        sees(cycle(4), (0, 1), (0, 1))


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 16), st.integers(0, 40), st.integers(0, 10**6))
def test_sees_matches_line_graph(n, m, seed):
    g = gen_random_graph(n, m, seed, max_degree=5)
    oracle = sees_line_graph(g)
    edges = g.edges()
    for i, e in enumerate(edges):
        assert seen_by(g, e) == {f for f in edges if f != e and (min(e, f), max(e, f)) in oracle}
        for f in edges[i + 1:]:
            assert sees(g, e, f) == ((e, f) in oracle)


def test_conflict_graph_csr():
    g = cycle(5)
    cg = build_conflict_graph(g)
    indptr, indices = cg.csr()
    assert len(indptr) == len(cg) + 1 and indptr[-1] == len(indices) == 2 * cg.num_conflicts
    for e in g.edges():
        assert cg.conflicts(e) == seen_by(g, e)


def test_validate_reports_each_failure():
    g = cycle(3)
    cg = build_conflict_graph(g)
    col = Coloring(2, {(0, 1): 1, (1, 2): 1, (5, 6): 2})
    col[(0, 2)] = 3
    rep = validate(cg, col)
    assert not rep.valid and rep.total
    assert rep.conflicts == [((0, 1), (1, 2))]
    assert rep.out_of_range == [(0, 2)]
    assert rep.unknown == [(5, 6)]
    assert "conflicting" in rep.summary()


def test_validate_missing_and_valid():
    g = cycle(3)
    cg = build_conflict_graph(g)
    col = Coloring(3, {(0, 1): 1, (1, 2): 2})
    assert validate(cg, col).missing == [(0, 2)]
    col[(2, 0)] = 3
    assert validate(cg, col).valid and col[(0, 2)] == 3


def test_available_colors():
    g = Graph(range(4), [(0, 1), (1, 2), (2, 3)])
    cg = build_conflict_graph(g)
    col = Coloring(3, {(2, 3): 2})
    assert available_colors(cg, col, (0, 1)) == {1, 3}


def test_coloring_helpers():
    col = Coloring(4, {(1, 0): 2, (2, 3): 4})
    assert col.num_colors == 2 and (0, 1) in col
    assert col.restrict([(0, 1)]).items() == [((0, 1), 2)] or list(col.restrict([(0, 1)]).items()) == [((0, 1), 2)]
    c2 = col.copy()
    c2.erase((0, 1))
    assert (0, 1) in col and (0, 1) not in c2

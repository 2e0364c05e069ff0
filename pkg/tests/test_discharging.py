from fractions import Fraction

import networkx as nx
import pytest

from injcolor.discharging import apply_discharging, audit_charges, ball, charges_initial, explain
from injcolor.generators import CASE_GADGETS, gen_case_gadget, gen_gadget, gen_random_graph
from injcolor.graph import Graph, derive_core
from injcolor.mad import THRESHOLD, mad_exact
from injcolor.reduction import Kind, find_reducible


def cycle(n):
    return Graph(range(n), [(i, (i + 1) % n) for i in range(n)])


@pytest.mark.parametrize("name", CASE_GADGETS)
def test_case_values_are_tight(name):
    gad = gen_case_gadget(name)
    ch = apply_discharging(derive_core(gad.graph))
    assert ch.final[gad.roles["v"]] == Fraction(8, 3)
    assert ch.conserved


def test_case_gadget_shapes():
    g = derive_core(gen_case_gadget("two_one").graph).graph
    rep = apply_discharging(g)
    v = gen_case_gadget("two_one").roles["v"]
    assert rep.classes[v].label == "2_1" and rep.received(v) == Fraction(2, 3)
    v = gen_case_gadget("three_two").roles["v"]
    rep = apply_discharging(gen_case_gadget("three_two").graph)
    assert rep.classes[v].label == "3_2"
    assert rep.sent(v) == Fraction(2, 3) and rep.received(v) == Fraction(1, 3)
    assert rep.s_value(v) == 2
    with pytest.raises(ValueError):
        gen_case_gadget("nope")


def test_rule_amounts():
    # 3_2 vertex 0 with 2_0 spokes and a 4-vertex neighbour
    gad = gen_case_gadget("three_two")
    rep = apply_discharging(gad.graph)
    rules = {(t.giver, t.receiver): (t.amount, t.rule) for t in rep.transfers}
    v = gad.roles["v"]
    for w in gad.graph.neighbors(v):
        if gad.graph.degree(w) == 2:
            assert rules[(v, w)] == (Fraction(1, 3), "R1")
        else:
            assert rules[(w, v)] == (Fraction(1, 3), "R2")


def test_cycle_all_deficient_and_explained():
    audit = audit_charges(derive_core(cycle(6)))
    assert audit.deficient == list(range(6))
    assert all(cfg.kind is Kind.ALL_SMALL_NEIGHBORS for cfg in audit.explanations.values())
    assert not audit.bug


def test_initial_charges_are_degrees():
    g = gen_gadget(Kind.DOUBLE_THREE_TWO).graph
    assert charges_initial(g) == {v: g.degree(v) for v in g.vertices()}


def test_ball():
    g = Graph(range(5), [(i, i + 1) for i in range(4)])
    assert ball(g, 0, 2) == {0, 1, 2}


def test_degree_cap_enforced():
    star = Graph(range(6), [(0, i) for i in range(1, 6)])
    with pytest.raises(ValueError):
        audit_charges(star)


def test_conservation_random():
    for seed in range(200):
        g = gen_random_graph(20, 30, seed, max_degree=6)
        h = derive_core(g)
        assert apply_discharging(h).conserved


def _atlas_graphs():
    for G in nx.graph_atlas_g()[1:]:
        if G.number_of_edges() and max(d for _, d in G.degree()) <= 4:
            yield Graph(G.nodes, G.edges)


def test_exhaustive_small_graphs():
    # every graph on at most 7 vertices with max degree <= 4
    checked = 0
    for g in _atlas_graphs():
        h = derive_core(g).graph
        audit = audit_charges(h)
        assert not audit.unexplained, g.edges()
        assert not audit.completeness_violation, g.edges()
        if find_reducible(h, h) is None:
            assert not audit.deficient, g.edges()
            assert h.size == 0 or mad_exact(h) >= THRESHOLD
        checked += 1
    assert checked == 677


def test_explain_none_without_configuration():
    # K4 core: every vertex is 3_0 and nothing is deficient or reducible
    k4 = Graph(range(4), [(a, b) for a in range(4) for b in range(a + 1, 4)])
    assert explain(k4, 0) is None
    assert audit_charges(k4).deficient == []

import networkx as nx
import pytest

import pathfactor as pf


def test_graph6_matches_networkx():
    for g in (nx.petersen_graph(), nx.cycle_graph(5), nx.complete_bipartite_graph(3, 3)):
        ours = pf.Graph(g.number_of_nodes(), list(g.edges()))
        theirs = nx.to_graph6_bytes(g, header=False).decode().strip()
        assert ours.graph6() == theirs
        assert pf.Graph.from_graph6(theirs) == ours


def test_factor_search():
    assert pf.find_p3_factor(pf.path_graph(3)) == [[0, 1, 2]]
    assert pf.find_p3_factor(pf.complete_graph(2)) is None
    f = pf.find_p3_factor(pf.cycle_graph(4), require=(0, 1), forbid=(2, 3))
    assert f is not None and len(f) == 1 and len(f[0]) == 4


def test_criteria_and_uniformity():
    assert not pf.kaneko_check(pf.complete_bipartite(1, 3))["holds"]
    assert pf.kaneko_check(pf.complete_bipartite(1, 3))["witness_x"] == [0]
    assert pf.is_uniform(pf.cycle_graph(4))["uniform"]
    r = pf.is_uniform(pf.remark1_graph(0))
    assert not r["uniform"] and r["witness_edge"] is not None


def test_parameters_and_reports():
    assert pf.independence_number(pf.cycle_graph(5))[0] == 2
    assert pf.vertex_connectivity(pf.remark2_graph(1)) == 2
    assert pf.check_thm13(pf.complete_graph(5))["satisfied"]
    assert not pf.check_thm14(pf.remark2_graph(1), 1, "1/3")["satisfied"]
    demo = pf.remark1_demo(0)
    assert demo["passed"] and demo["sun_count"] == 5 and demo["bound"] == 4
    assert pf.analyze(pf.cycle_graph(4))["uniform"] is True


def test_errors():
    with pytest.raises(ValueError):
        pf.Graph(2, [(0, 0)])
    with pytest.raises(ValueError):
        pf.Graph.from_graph6("")
    with pytest.raises(pf.BudgetExhausted):
        pf.find_p3_factor(pf.remark1_graph(0), budget=1)

from fractions import Fraction

import networkx as nx
import pytest

import opgraph


def test_metrics_match_networkx_on_hexagon_with_chord():
    edges = [(i, (i + 1) % 6) for i in range(6)] + [(0, 3)]
    m = opgraph.metrics(6, edges)
    g = nx.Graph(edges)
    sums = [sum(nx.single_source_shortest_path_length(g, v).values()) for v in range(6)]
    assert m["transmission"] == sums
    assert m["proximity"] == Fraction(min(sums), 5)
    assert m["remoteness"] == Fraction(max(sums), 5)
    assert m["radius"] == nx.radius(g)
    assert m["diameter"] == nx.diameter(g)


def test_bounds_are_fractions():
    assert opgraph.bound("proxmop", 10) == Fraction(15, 8) + Fraction(3, 36)
    assert opgraph.bound("rad", 12) == 4
    assert opgraph.chordal_radius_interval(5) == (3, 3)


def test_generated_graph_is_recognised():
    gg = opgraph.generate("hnq", 12, q=4)
    report = opgraph.analyze(gg["n"], [tuple(e) for e in gg["edges"]])
    assert report["outerplanar"]["status"] == "outerplanar"


def test_witness_value_matches_transmission():
    gg = opgraph.generate("ladder", 10)
    edges = [tuple(e) for e in gg["edges"]]
    cert = opgraph.witness(10, edges, kind="proximity")
    m = opgraph.metrics(10, edges)
    assert cert["exact_value"] == m["transmission"][cert["vertex"]]


def test_counts_and_qn():
    assert opgraph.count_dissections(6) == 45
    assert opgraph.count_dissections(7, mops=True) == 42
    assert opgraph.qn(7)["qn"] == 5
    assert opgraph.verify(7)["all_clean"] is True


def test_errors_raise_value_error():
    with pytest.raises(ValueError):
        opgraph.metrics(4, [(0, 1), (2, 3)])
    with pytest.raises(opgraph.OpgraphError):
        opgraph.generate("hnq", 13, q=4)

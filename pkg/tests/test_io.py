import pytest
from hypothesis import given

from conftest import graphs
from mkgraphs import io
from mkgraphs.errors import InvalidInputError
from mkgraphs.fan import cut_certificate, decide_fan, NotHamiltonianCutSet
from mkgraphs.graph import fan_graph, path_graph
from mkgraphs.multiset import multiset_graph


def test_edge_list_layout():
    text = io.write_edge_list(path_graph(3))
    assert text == "p 3 2\ne 1 2\ne 2 3\n"


@given(graphs(max_order=8))
def test_edge_list_round_trip(g):
    assert io.read_edge_list(io.write_edge_list(g)).graph == g


def test_big_graph_round_trip():
    big = multiset_graph(fan_graph(2, 2)[0])
    text = io.write_big_graph(big)
    assert text.splitlines()[:2] == ["p 10 20", "v 1 1,1"]
    doc = io.read_edge_list(text)
    assert doc.graph == big.graph and doc.vertex_table == big.vertex_of


@pytest.mark.parametrize("text", ["e 1 2\n", "p 2 2\ne 1 2\n", "p 2 1\nx 1 2\n", "p 2 1\ne 1\n",
                                  "p 2 1\nv 1 1,1\ne 1 2\n"])
def test_edge_list_rejects(text):
    with pytest.raises(InvalidInputError):
        io.read_edge_list(text)


def test_dot():
    g, lab = fan_graph(1, 2)
    dot = io.write_dot(g, lab)
    assert dot.startswith("graph G {")
    assert '"v1" -- "v2";' in dot and '"v1" -- "w1";' in dot
    assert '"1" -- "2";' in io.write_dot(g)


def test_fan_cycle_file_round_trip():
    cyc = decide_fan(2, 3).cycle
    text = io.write_fan_cycle(cyc, 2, 3)
    lines = text.splitlines()
    assert lines[0] == "# M2 fan m=2 n=3"
    assert lines[1] == "v3,w1"
    assert len(lines) == 1 + len(cyc)
    assert io.read_cycle(text) == list(cyc.seq)


def test_cycle_file_needs_header_for_labels():
    with pytest.raises(InvalidInputError):
        io.read_cycle("v1,w1\n")
    assert io.read_cycle("3\n1\n2\n") == [3, 1, 2]
    with pytest.raises(InvalidInputError):
        io.read_cycle("3\n1,2\n")


def test_certificate_round_trip():
    s, comps = cut_certificate(3, 2)
    text = io.write_certificate(NotHamiltonianCutSet(s, comps), 3, 2)
    assert text.splitlines()[-1] == "components=7 |S|=6"
    s2, c2, size = io.read_certificate(text)
    assert set(s2) == set(s) and (c2, size) == (7, 6)

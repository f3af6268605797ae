import networkx as nx
import pytest
from hypothesis import given

from conftest import graphs
from mkgraphs.errors import InvalidInputError
from mkgraphs.graph import (FanLabeling, Graph, connected_components, delete_vertices,
                            empty_graph, fan_graph, join, make_base_graph, path_graph, relabel)
from oracles import naive_has_ham_cycle


def test_base_graphs():
    assert make_base_graph("path", 2).edges == ((1, 2),)
    assert make_base_graph("empty", 3) == Graph(3)
    assert set(make_base_graph("cycle", 4).edges) == {(1, 2), (2, 3), (3, 4), (1, 4)}
    assert make_base_graph("complete", 4).size == 6


@pytest.mark.parametrize("kind,size", [("cycle", 2), ("path", 0), ("empty", -1), ("star", 3)])
def test_base_graph_rejects(kind, size):
    with pytest.raises(InvalidInputError):
        make_base_graph(kind, size)


def test_graph_validation():
    with pytest.raises(InvalidInputError):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(InvalidInputError):
        Graph.from_edges(3, [(1, 4)])
    g = Graph.from_edges(3, [(2, 1), (1, 2), (3, 2)])
    assert g.edges == ((1, 2), (2, 3))


def test_join_examples():
    f22 = join(empty_graph(2), path_graph(2))
    assert (f22.order, f22.size) == (4, 5)
    assert join(empty_graph(1), path_graph(1)) == Graph.from_edges(2, [(1, 2)])
    assert join(empty_graph(1), path_graph(2)) == make_base_graph("complete", 3)


def test_fan_examples():
    g, lab = fan_graph(2, 2)
    assert (g.order, g.size) == (4, 5)
    assert fan_graph(1, 1)[0] == Graph.from_edges(2, [(1, 2)])
    g, lab = fan_graph(4, 3)
    assert (g.order, g.size) == (7, 14)
    assert not naive_has_ham_cycle(g.order, g.edges)
    assert lab.name(1) == "v1" and lab.name(4) == "w1" and lab.parse("w4") == 7


@pytest.mark.parametrize("m,n", [(0, 2), (2, 0)])
def test_fan_rejects(m, n):
    with pytest.raises(InvalidInputError):
        fan_graph(m, n)


@pytest.mark.parametrize("m", range(1, 6))
@pytest.mark.parametrize("n", range(1, 6))
def test_fan_is_relabeled_join(m, n):
    g, lab = fan_graph(m, n)
    assert g.size == (n - 1) + m * n
    # join(P_n, E_m) puts the path first, which is exactly the v-first convention.
    assert g == join(path_graph(n), empty_graph(m))
    # join(E_m, P_n) agrees after swapping the two blocks.
    swap = {i: n + i for i in range(1, m + 1)} | {m + j: j for j in range(1, n + 1)}
    assert relabel(join(empty_graph(m), path_graph(n)), swap) == g


@given(graphs(), graphs())
def test_join_counts(g1, g2):
    j = join(g1, g2)
    assert j.order == g1.order + g2.order
    assert j.size == g1.size + g2.size + g1.order * g2.order


def test_components_examples():
    assert connected_components(empty_graph(3)) == [[1], [2], [3]]
    assert connected_components(path_graph(4)) == [[1, 2, 3, 4]]
    assert connected_components(Graph.from_edges(3, [(1, 2)])) == [[1, 2], [3]]


@given(graphs(max_order=9))
def test_components_match_networkx(g):
    ref = nx.Graph()
    ref.add_nodes_from(g.vertices)
    ref.add_edges_from(g.edges)
    expected = sorted(sorted(c) for c in nx.connected_components(ref))
    assert connected_components(g) == expected


def test_delete_vertices_examples():
    assert delete_vertices(path_graph(3), {2}).graph == empty_graph(2)
    assert delete_vertices(path_graph(3), set()).graph == path_graph(3)
    g, lab = fan_graph(2, 3)
    d = delete_vertices(g, {lab.w(1), lab.w(2)})
    assert d.graph == path_graph(3)
    with pytest.raises(InvalidInputError):
        delete_vertices(path_graph(3), {4})


@given(graphs(max_order=8), graphs(max_order=8))
def test_delete_vertices_partition(g, h):
    s = {v for v in h.vertices if v <= g.order}
    d = delete_vertices(g, s)
    comps = connected_components(d.graph)
    flat = sorted(x for c in comps for x in c)
    assert flat == list(range(1, g.order - len(s) + 1))
    # Each kept edge is an original edge between kept vertices.
    for a, b in d.graph.edges:
        assert g.has_edge(d.old_id[a], d.old_id[b])
    assert d.graph.size == sum(1 for a, b in g.edges if a not in s and b not in s)


def test_fan_labeling_bounds():
    lab = FanLabeling(2, 3)
    with pytest.raises(InvalidInputError):
        lab.w(3)
    with pytest.raises(InvalidInputError):
        lab.parse("x1")

from fractions import Fraction

import pytest

from graphs import DisconnectedGraphError, Graph, GraphError, OneSumChain, add_edges, attach_pendants, chain_sum, \
    cut_vertices, is_connected, make_barbell, make_complete, make_cycle, make_friendship, make_kn_path, make_path, \
    make_star, one_sum, remove_edges


def test_graph_canonicalises_edges():
    g = Graph(3, [(2, 1), (1, 0)])
    assert g.edges == ((0, 1), (1, 2))
    assert g.degrees == (1, 2, 1)
    assert g.non_edges() == [(0, 2)]
    assert not g.is_weighted


@pytest.mark.parametrize('edges', [[(0, 0)], [(0, 1), (1, 0)], [(0, 3)]])
def test_graph_rejects_bad_edges(edges):
    with pytest.raises(GraphError):
        Graph(3, edges)


def test_graph_weights():
    g = Graph(2, [(0, 1)], {(1, 0): '3/2'})
    assert g.is_weighted
    assert g.weight(0, 1) == Fraction(3, 2)
    assert Graph(2, [(0, 1)], {(0, 1): 1}) == make_path(2)
    with pytest.raises(GraphError):
        Graph(2, [(0, 1)], {(0, 1): 0})


def test_networkx_round_trip_keeps_equality_and_hash():
    g = make_friendship(2)
    assert Graph.from_networkx(g.to_networkx()) == g
    assert len({g, make_friendship(2)}) == 1


def test_families():
    assert make_complete(5).m == 10
    assert make_path(4).edges == ((0, 1), (1, 2), (2, 3))
    assert make_star(4).degrees == (3, 1, 1, 1)
    assert make_cycle(5).degrees == (2, ) * 5
    assert make_friendship(3).degree(0) == 6


def test_barbell_layout():
    g = make_barbell(1, 4, 2, 3)
    assert g.n == 9
    assert g.m == 3 + 3 + 6
    # The path is 2..5, with 2 in the left clique and 5 in the right clique
    assert g.has_edge(0, 2) and g.has_edge(1, 2) and g.has_edge(5, 8)
    assert cut_vertices(g) == frozenset(range(2, 6))


def test_kn_path_end_is_a_leaf():
    g, end = make_kn_path(4)
    assert g.n == 7
    assert g.m == 6 + 3
    assert g.degree(end) == 1


def test_one_sum_relabels_first_graph():
    graph, g1_map = one_sum(make_complete(3), 1, make_path(2), 0)
    assert graph.n == 4
    assert g1_map == (2, 0, 3)
    assert graph.edges == ((0, 1), (0, 2), (0, 3), (2, 3))
    assert cut_vertices(graph) == frozenset([0])


def test_one_sum_rejects_disconnected_parts():
    with pytest.raises(DisconnectedGraphError):
        one_sum(Graph(2), 0, make_path(2), 0)


def test_chain_sum_of_edges_is_a_path():
    edge = make_path(2)
    chain = OneSumChain([(edge, None, 1), (edge, 0, 1), (edge, 0, None)])
    graph, part_maps = chain_sum(chain)
    assert graph.m == 3 and is_connected(graph)
    assert max(graph.degrees) == 2
    assert len(part_maps) == 3
    assert all(len(part_map) == 2 for part_map in part_maps)


def test_from_shared_vertex_builds_a_star():
    edge = make_path(2)
    graph, _ = chain_sum(OneSumChain.from_shared_vertex([(edge, 0)] * 3))
    assert sorted(graph.degrees) == [1, 1, 1, 3]


def test_edge_edits():
    g = make_path(3)
    triangle = add_edges(g, [(2, 0)])
    assert triangle == make_complete(3)
    assert remove_edges(triangle, [(0, 2)]) == g
    with pytest.raises(GraphError):
        add_edges(g, [(0, 1)])
    with pytest.raises(GraphError):
        remove_edges(g, [(0, 2)])


def test_attach_pendants_appends_labels():
    g = attach_pendants(make_path(2), 1, 3)
    assert g.n == 5
    assert g.neighbours(1) == (0, 2, 3, 4)

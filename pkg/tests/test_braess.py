from fractions import Fraction

import pytest

from braess import SearchSpaceError, braess_check, braess_edges, braess_scan, canonical_edge_set, \
    delta_kemeny_direct, delta_kemeny_separated, kn_path_composite, kn_path_delta_kemeny, pendant_bound_monotonicity, \
    pendant_bound_to_dict, pendant_star_bound, pendant_star_graph, pendant_star_report, raw_pendant_bound, \
    report_to_dict, separated_check, simplified_pendant_bound, smallest_braess_kn_path
from graphs import GraphError, Graph, make_complete, make_cycle, make_path, make_star, one_sum

PATH7_WITNESS = ((0, 2), (4, 6))


def test_path7_edge_pair_is_braess_but_single_edges_are_not():
    g = make_path(7)
    assert delta_kemeny_direct(g, PATH7_WITNESS) > 0
    assert delta_kemeny_direct(g, [(0, 2)]) < 0
    assert delta_kemeny_direct(g, [(4, 6)]) < 0
    assert braess_check(g, PATH7_WITNESS).is_braess


def test_delta_values():
    assert delta_kemeny_direct(make_star(4), [(1, 2)]) == Fraction(1, 24)
    assert delta_kemeny_direct(make_path(3), [(0, 2)]) == Fraction(-1, 6)
    assert delta_kemeny_direct(make_path(3), []) == 0


def test_edge_set_validation():
    assert canonical_edge_set([(4, 2), (1, 0)]) == ((0, 1), (2, 4))
    with pytest.raises(GraphError):
        canonical_edge_set([(0, 1), (1, 0)])
    with pytest.raises(GraphError):
        delta_kemeny_direct(make_path(3), [(0, 1)])


def test_twin_pendants_are_braess():
    assert braess_edges(make_star(4)) == [(1, 2), (1, 3), (2, 3)]


def test_scan_finds_the_path7_witness():
    reports = braess_scan(make_path(7), 2, graph_id='p7', check_rayleigh=False)
    assert len(reports) == 15 + 15 * 14 // 2
    deltas = [report.delta_kemeny for report in reports]
    assert deltas == sorted(deltas, reverse=True)
    witness = [report for report in reports if report.edge_set == PATH7_WITNESS]
    assert len(witness) == 1 and witness[0].is_braess


def test_scan_caps():
    with pytest.raises(SearchSpaceError):
        braess_scan(make_path(7), 1, max_non_edges=10)
    with pytest.raises(ValueError):
        braess_scan(make_path(4), 0)


@pytest.mark.parametrize('g1, v1, g2, v2, edge_set', [
    (make_complete(3), 0, make_star(3), 0, [(1, 2)]),
    (make_path(2), 1, make_path(4), 0, [(0, 2)]),
    (make_cycle(4), 1, make_path(4), 1, [(0, 2), (1, 3)]),
    (make_complete(5), 2, make_star(4), 0, [(1, 2), (2, 3)]),
])
def test_separated_matches_direct(g1, v1, g2, v2, edge_set):
    report = delta_kemeny_separated(g1, v1, g2, v2, edge_set, check_rayleigh=True)
    assert report.delta_kemeny == delta_kemeny_direct(one_sum(g1, v1, g2, v2)[0], edge_set)
    assert report.resistances_nonincreasing
    if report.sufficiency_condition_holds:
        assert report.is_braess


def test_separated_rejects_edges_outside_second_part():
    with pytest.raises(GraphError):
        delta_kemeny_separated(make_path(3), 0, make_path(3), 0, [(0, 3)])


def test_separated_check_maps_labels_back():
    g = make_path(7)
    report = separated_check(g, 3, [(6, 4)])
    assert report.edge_set == ((4, 6), )
    assert report.delta_kemeny == delta_kemeny_direct(g, [(4, 6)])
    with pytest.raises(GraphError):
        separated_check(g, 3, PATH7_WITNESS)


def test_pendant_star_bounds():
    bound = pendant_star_bound(2, 1)
    assert bound.bound == 1 and bound.exact
    irrational = pendant_star_bound(3, 2)
    assert not irrational.exact
    assert irrational.bound >= simplified_pendant_bound(3, 2)
    assert irrational.bound - Fraction(1, 10 ** 6) < simplified_pendant_bound(3, 2)
    with pytest.raises(ValueError):
        pendant_star_bound(3, 4)
    assert pendant_bound_to_dict(bound)['bound'] == '1/1'


def test_raw_bound():
    assert 26 < raw_pendant_bound(10, 1) < 27
    report = pendant_bound_monotonicity(8)
    assert report['pairs_checked'] == 21
    assert report['increasing'] + len(report['exceptions']) == report['pairs_checked']


def test_pendant_star_report():
    graph, edge_set = pendant_star_graph(make_complete(4), 0, 2, [(0, 1)])
    assert graph.n == 6 and edge_set == ((4, 5), )
    report = pendant_star_report(make_complete(4), 0, 2, [(0, 1)])
    assert report.above_bound and report.is_braess
    with pytest.raises(GraphError):
        pendant_star_graph(make_complete(4), 0, 2, [(0, 2)])


def test_kn_path_host():
    g2 = make_star(3)
    for n in range(2, 5):
        assert kn_path_delta_kemeny(n, g2, 1, [(1, 2)]) == delta_kemeny_direct(kn_path_composite(n, g2, 1), [(1, 2)])
    smallest = smallest_braess_kn_path(make_path(4), 0, [(1, 3)], max_n=12)
    if smallest is not None:
        assert kn_path_delta_kemeny(smallest, make_path(4), 0, [(1, 3)]) > 0
        assert all(kn_path_delta_kemeny(n, make_path(4), 0, [(1, 3)]) <= 0 for n in range(2, smallest))


def test_report_to_dict():
    report = report_to_dict(delta_kemeny_separated(make_complete(3), 0, make_star(3), 0, [(1, 2)], graph_id='g'))
    assert report['graph'] == 'g'
    assert report['edge_set'] == [[1, 2]]
    assert set(report['terms']) == {'A', 'B', 'C'}
    assert report['separation']['v2'] == 0
    assert report['delta'].count('/') == 1


def test_weighted_graph_rejected():
    with pytest.raises(ValueError):
        delta_kemeny_direct(Graph(3, [(0, 1), (1, 2)], {(0, 1): 2}), [(0, 2)])

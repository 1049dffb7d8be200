from fractions import Fraction

import pytest

from graphs import DisconnectedGraphError, Graph, make_complete, make_cycle, make_friendship, make_path, make_star
from kemeny import KemenyInputError, all_moments, check_methods_agree, kemeny, kemeny_hitting_oracle, \
    kemeny_resistance, moment, moment_minus_kemeny, summarize, transition_matrix


@pytest.mark.parametrize('g, expected', [
    (make_path(2), Fraction(1, 2)),
    (make_path(3), Fraction(3, 2)),
    (make_path(4), Fraction(19, 6)),
    (make_complete(4), Fraction(9, 4)),
    (make_complete(5), Fraction(16, 5)),
    (make_star(4), Fraction(5, 2)),
    (make_cycle(4), Fraction(5, 2)),
    (make_friendship(2), Fraction(4)),
])
def test_kemeny_by_both_methods(g, expected):
    assert kemeny(g) == expected
    assert kemeny_hitting_oracle(g).kemeny == expected
    assert check_methods_agree(g) == expected


def test_hitting_oracle_agrees_from_every_start():
    report = kemeny_hitting_oracle(make_star(5))
    assert report.method == 'hitting_time'
    assert set(report.per_start_values) == {Fraction(7, 2)}


def test_transition_matrix_rows_sum_to_one():
    transitions = transition_matrix(make_star(4))
    assert all(sum(row) == 1 for row in transitions)
    assert transitions[0, 1] == Fraction(1, 3)


def test_moments():
    assert moment(make_path(5), 0).value == 16
    assert moment(make_complete(4), 2).value == Fraction(9, 2)
    assert moment(make_star(4), 0).value == 3
    assert [value.value for value in all_moments(make_path(3))] == [4, 2, 4]
    assert moment(Graph(1), 0).value == 0


def test_moment_minus_kemeny():
    assert moment_minus_kemeny(make_path(3), 1) == Fraction(1, 2)
    assert moment_minus_kemeny(make_complete(4), 0) == Fraction(9, 4)


def test_summary():
    summary = summarize(make_path(3))
    assert summary.m == 2
    assert summary.kemeny == Fraction(3, 2)
    assert summary.moments == (4, 2, 4)
    assert summary.resistances[0][2] == 2
    assert summarize(Graph(1)).kemeny == 0


def test_float_mode():
    report = kemeny_resistance(make_path(4), 'float', float_cutoff=2)
    assert report.kemeny == pytest.approx(19 / 6)


@pytest.mark.parametrize('g, error', [
    (Graph(3, [(0, 1)]), DisconnectedGraphError),
    (Graph(1), KemenyInputError),
    (Graph(2, [(0, 1)], {(0, 1): 2}), KemenyInputError),
])
def test_rejected_inputs(g, error):
    with pytest.raises(error):
        kemeny(g)
    with pytest.raises(error):
        kemeny_hitting_oracle(g)

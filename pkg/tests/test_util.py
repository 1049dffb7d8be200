from fractions import Fraction
import io
import json

import pytest

from util import EXIT_CAP_EXCEEDED, EXIT_INPUT_ERROR, EXIT_SUCCESS, CapExceededError, add_number, \
    create_run_config, emit_report, format_rational, get_num_workers, parallel_map, parse_edge_str, parse_param_str, \
    to_json, to_table


def test_parse_param_str():
    assert parse_param_str('n=5:name=star:ratio=0.5') == {'n': 5, 'name': 'star', 'ratio': 0.5}
    assert parse_param_str(None) == {}
    with pytest.raises(ValueError):
        parse_param_str('n5')


def test_parse_edge_str():
    assert parse_edge_str('0-2, 4-6') == [(0, 2), (4, 6)]
    assert parse_edge_str('') == []
    with pytest.raises(ValueError):
        parse_edge_str('0-a')


def test_format_rational():
    assert format_rational(Fraction(6, 4)) == '3/2'
    assert format_rational(Fraction(-1, 6)) == '-1/6'
    assert format_rational(2) == '2/1'
    assert format_rational(0.5) is None


def test_add_number():
    report = add_number({}, 'kemeny', Fraction(19, 6))
    assert report == {'kemeny': '19/6', 'kemeny_float': pytest.approx(19 / 6)}


def test_json_is_sorted_and_stable():
    text = to_json({'b': 1, 'a': {'d': 2, 'c': [1, 2]}})
    assert text.index('"a"') < text.index('"b"')
    assert json.loads(text) == {'a': {'c': [1, 2], 'd': 2}, 'b': 1}


def test_to_table_flattens_keys():
    assert to_table({'a': {'b': 1}, 'c': [True]}) == ['a.b\t1', 'c.0\tTrue']


def test_create_run_config_validates():
    config = create_run_config(num_workers=1)
    assert config.max_n == 5 and config.num_workers == 1
    assert (config.tree_max_n, config.corpus_max_n, config.pair_max_n) == (8, 6, 5)
    with pytest.raises(ValueError):
        create_run_config(numeric_mode='approximate')
    with pytest.raises(ValueError):
        create_run_config(output_format='xml')
    with pytest.raises(ValueError):
        create_run_config(max_set_size=0)
    with pytest.raises(ValueError):
        create_run_config(tree_max_n=0)


def test_emit_report_exit_codes():
    out = io.StringIO()
    assert emit_report(lambda: ({'value': '1/2'}, EXIT_SUCCESS), out=out) == EXIT_SUCCESS
    assert json.loads(out.getvalue()) == {'value': '1/2'}

    def too_large():
        raise CapExceededError('n=12 is above the cap of 9')

    def bad_input():
        raise ValueError('graph is disconnected')

    out = io.StringIO()
    assert emit_report(too_large, out=out) == EXIT_CAP_EXCEEDED
    assert emit_report(bad_input, out=out) == EXIT_INPUT_ERROR
    assert out.getvalue() == ''


def test_num_workers_from_environment(monkeypatch):
    monkeypatch.setenv('KEMENY_THREADS', '3')
    assert get_num_workers() == 3
    monkeypatch.setenv('KEMENY_THREADS', '0')
    with pytest.raises(ValueError):
        get_num_workers()


def test_parallel_map_keeps_order():
    assert parallel_map(abs, [-3, 2, -1]) == [3, 2, 1]
    assert parallel_map(abs, [-3, 2, -1], num_workers=2) == [3, 2, 1]

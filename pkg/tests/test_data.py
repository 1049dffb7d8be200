import pytest

from data import GraphFormatError, build_family_graph, create_graph_file, format_edge_list, parse_edge_list, \
    read_edge_list, write_edge_list
from graphs import make_barbell, make_path


def test_parse_edge_list_with_comments_and_header():
    g = parse_edge_list(['# a path', '', 'n 4', '0 1', '1 2', '2 3'])
    assert g == make_path(4)


def test_parse_edge_list_infers_vertex_count():
    assert parse_edge_list(['0 1', '2 1']).n == 3


def test_parse_edge_list_weights():
    g = parse_edge_list(['0 1 3/2', '1 2'])
    assert g.is_weighted
    assert str(g.weight(0, 1)) == '3/2'


@pytest.mark.parametrize('lines, line_number', [
    (['0 1', '1 1'], 2),
    (['0 1', '1 0'], 2),
    (['0 -1'], 1),
    (['0 x'], 1),
    (['0 1 2 3'], 1),
    (['0 1 -2'], 1),
    (['n 2', '0 2'], 2),
    (['0 1', 'n 3'], 2),
])
def test_parse_edge_list_errors_report_line(lines, line_number):
    with pytest.raises(GraphFormatError) as excinfo:
        parse_edge_list(lines, source='g.txt')
    assert excinfo.value.line_number == line_number
    assert 'g.txt:line %d' % line_number in str(excinfo.value)


def test_parse_edge_list_needs_edges_or_header():
    with pytest.raises(GraphFormatError):
        parse_edge_list(['# nothing here'])
    assert parse_edge_list(['n 1']).n == 1


def test_write_and_read_keep_isolated_vertex(tmp_path):
    path = str(tmp_path / 'g.txt')
    g = make_path(3)
    write_edge_list(g, path)
    assert read_edge_list(path) == g
    assert format_edge_list(g).startswith('n 3\n')


def test_read_edge_list_missing_file(tmp_path):
    path = str(tmp_path / 'missing.edges')
    with pytest.raises(GraphFormatError) as excinfo:
        read_edge_list(path)
    assert 'cannot read file' in str(excinfo.value)
    assert excinfo.value.line_number is None


def test_read_edge_list_reports_undecodable_line(tmp_path):
    path = tmp_path / 'latin1.edges'
    path.write_bytes(b'0 1\n\xff\xfe 2\n')
    with pytest.raises(GraphFormatError) as excinfo:
        read_edge_list(str(path))
    assert excinfo.value.line_number == 2
    assert 'not valid UTF-8' in str(excinfo.value)


def test_build_family_graph_from_param_string():
    assert build_family_graph('path', 'n=5') == make_path(5)
    assert build_family_graph('barbell', 'k=1:a=6:b=4:c=5') == make_barbell(1, 6, 4, 5)
    assert build_family_graph('kn_path', {'n': 3}).n == 5
    with pytest.raises(ValueError):
        build_family_graph('petersen', 'n=10')
    with pytest.raises(ValueError):
        build_family_graph('path', 'm=5')


def test_create_graph_file_refuses_to_overwrite(tmp_path):
    path = str(tmp_path / 'star.txt')
    create_graph_file('star', path, 'n=4')
    with pytest.raises(ValueError):
        create_graph_file('star', path, 'n=5')
    with pytest.warns(UserWarning):
        create_graph_file('star', path, 'n=5', overwrite=True)
    assert read_edge_list(path).n == 5

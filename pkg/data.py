"""Edge-list files: parsing, writing, and creating files for the standard graph families.

Format: one edge per line as "u v" (whitespace-separated decimal vertices), with an optional third token holding the
edge weight as "p/q" or an integer. Lines starting with '#' and blank lines are ignored. The vertex count is the
largest index plus one, unless the first line is a "n <count>" header.
"""

from fractions import Fraction
import os
import sys
from warnings import warn

from commandr import command

from graphs import Graph, GraphError, make_barbell, make_complete, make_cycle, make_friendship, make_kn_path, \
    make_path, make_star
from util import parse_param_str


class GraphFormatError(ValueError):
    """Raised on a malformed edge-list line. line_number is 1-based, or None for whole-file problems."""

    def __init__(self, message, line_number=None, source=None):
        location = ''
        if source:
            location += '%s:' % source
        if line_number is not None:
            location += 'line %d: ' % line_number
        elif location:
            location += ' '
        super(GraphFormatError, self).__init__(location + message)
        self.line_number = line_number


def _parse_vertex(token, line_number, source):
    try:
        vertex = int(token)
    except ValueError:
        raise GraphFormatError('vertex %r is not an integer' % token, line_number, source)
    if vertex < 0:
        raise GraphFormatError('vertex %s is negative' % vertex, line_number, source)
    return vertex


def _parse_weight(token, line_number, source):
    try:
        weight = Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise GraphFormatError('weight %r is not a rational number' % token, line_number, source)
    if weight <= 0:
        raise GraphFormatError('weight %s is not positive' % token, line_number, source)
    return weight


def parse_edge_list(lines, source=None):
    """Parse edge-list lines into a Graph, raising GraphFormatError with the offending line number."""
    declared_n = None
    edges = []
    weights = {}
    edge_line_numbers = {}
    seen_content = False
    for line_number, line in enumerate(lines, 1):
        tokens = line.split()
        if not tokens or tokens[0].startswith('#'):
            continue
        if tokens[0] == 'n':
            if seen_content:
                raise GraphFormatError('the "n <count>" header must come before the edges', line_number, source)
            if len(tokens) != 2:
                raise GraphFormatError('expected "n <count>"', line_number, source)
            declared_n = _parse_vertex(tokens[1], line_number, source)
            if declared_n < 1:
                raise GraphFormatError('vertex count must be positive', line_number, source)
            seen_content = True
            continue
        seen_content = True
        if len(tokens) not in (2, 3):
            raise GraphFormatError('expected "u v" or "u v weight", got %d tokens' % len(tokens), line_number, source)
        u, v = (_parse_vertex(token, line_number, source) for token in tokens[:2])
        if u == v:
            raise GraphFormatError('self-loop at vertex %s' % u, line_number, source)
        edge = (min(u, v), max(u, v))
        if edge in edge_line_numbers:
            raise GraphFormatError('duplicate edge %s (first given on line %d)' % (edge, edge_line_numbers[edge]),
                                   line_number, source)
        if declared_n is not None and max(edge) >= declared_n:
            raise GraphFormatError('vertex %s is not below the declared count %s' % (max(edge), declared_n),
                                   line_number, source)
        edge_line_numbers[edge] = line_number
        edges.append(edge)
        if len(tokens) == 3:
            weights[edge] = _parse_weight(tokens[2], line_number, source)

    if declared_n is None:
        if not edges:
            raise GraphFormatError('no edges and no "n <count>" header', source=source)
        declared_n = max(max(edge) for edge in edges) + 1
    try:
        return Graph(declared_n, edges, weights)
    except GraphError as e:
        raise GraphFormatError(str(e), source=source)


def _decoded_lines(in_file, source):
    for line_number, raw_line in enumerate(in_file, 1):
        try:
            yield raw_line.decode('utf-8')
        except UnicodeDecodeError:
            raise GraphFormatError('line is not valid UTF-8', line_number, source)


def read_edge_list(path):
    """Read a Graph from an edge-list file. Unreadable files raise GraphFormatError like malformed ones."""
    try:
        with open(path, 'rb') as in_file:
            return parse_edge_list(_decoded_lines(in_file, path), source=path)
    except OSError as e:
        raise GraphFormatError('cannot read file: %s' % (e.strerror or e), source=path)


def format_edge_list(g):
    """Return the edge-list text of g, with an "n <count>" header so isolated trailing vertices survive."""
    lines = ['n %d' % g.n]
    for u, v in g.edges:
        weight = g.weight(u, v)
        if g.is_weighted and weight != 1:
            lines.append('%d %d %s' % (u, v, weight))
        else:
            lines.append('%d %d' % (u, v))
    return '\n'.join(lines) + '\n'


def write_edge_list(g, path):
    with open(path, 'w') as out:
        out.write(format_edge_list(g))


def build_family_graph(family, params=None):
    """Build a graph of the named family from a dict (or parameter string) of its constructor's arguments."""
    if not isinstance(params, dict):
        params = parse_param_str(params)
    builders = {
        'complete': make_complete,
        'path': make_path,
        'star': make_star,
        'cycle': make_cycle,
        'friendship': make_friendship,
        'barbell': lambda k=1, a=2, b=1, c=1: make_barbell(k, a, b, c),
        'kn_path': lambda n: make_kn_path(n)[0],
    }
    if family not in builders:
        raise ValueError('Unknown family %s (valid values: %s)' % (family, ', '.join(sorted(builders))))
    try:
        return builders[family](**params)
    except TypeError as e:
        raise ValueError('Bad parameters %s for family %s: %s' % (params, family, e))


@command
def create_graph_file(family, out_path, params=None, overwrite=False):
    """Write an edge-list file for a graph of a standard family.

    Arguments:
     * family (str) - one of complete, path, star, cycle, friendship, barbell, kn_path
     * out_path (str) - path of the edge-list file to create
     * params (str) - colon-separated list of equals-separated key-value pairs passed to the family's constructor,
                      e.g., "n=5" for the path P_5, or "k=1:a=6:b=4:c=5" for the barbell B(1, 6, 4, 5)
     * overwrite (bool) - if True, an existing out_path is replaced
    """
    if os.path.exists(out_path):
        if not overwrite:
            raise ValueError('%s already exists' % out_path)
        warn('Overwriting %s' % out_path)
    g = build_family_graph(family, params)
    write_edge_list(g, out_path)
    print('Wrote %s (%d vertices, %d edges) to %s' % (family, g.n, g.m, out_path), file=sys.stderr)

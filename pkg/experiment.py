"""Commands for computing Kemeny's constant, barbell closed forms and Braess sets of single graphs."""

from collections import OrderedDict
import sys

from commandr import command

from braess import braess_check, braess_scan, report_to_dict, separated_check
from closed_forms import barbell_best_parameters, barbell_thirds_parameters, best_barbell, kemeny_barbell, \
    kemeny_barbell_best, kemeny_barbell_thirds
from data import read_edge_list
from graphs import make_barbell
from kemeny import KemenyConsistencyError, all_moments, kemeny, kemeny_hitting_oracle, kemeny_resistance
from resistance import resistance_matrix
from util import EXIT_SUCCESS, EXIT_VERIFICATION_FAILURE, add_number, create_run_config, emit_report, \
    format_rational, number_fields, parse_edge_str

_DEFAULT_FLOAT_CUTOFF = 64


def _matrix_fields(matrix):
    return {'exact': [[format_rational(value) for value in row] for row in matrix],
            'float': [[float(value) for value in row] for row in matrix]}


def _parse_moment_vertices(g, moments):
    if moments is None or moments == '':
        return []
    if str(moments) == 'all':
        return list(range(g.n))
    try:
        vertex = int(moments)
    except ValueError:
        raise ValueError('moments must be a vertex index or "all" (got %r)' % moments)
    return [g.check_vertex(vertex)]


def build_compute_report(g, graph_id, resistances=False, moments=None, config=None):
    """Return the compute report of g and its exit code.

    Kemeny's constant comes from the resistance formula and, unless the graph is computed in float mode, from the
    hitting-time oracle too. A disagreement between the methods gives EXIT_VERIFICATION_FAILURE.
    """
    config = config or create_run_config(num_workers=1)
    moment_vertices = _parse_moment_vertices(g, moments)
    float_computation = config.numeric_mode == 'float' and g.n > config.float_cutoff
    by_resistance = kemeny_resistance(g, config.numeric_mode, config.float_cutoff)
    report = OrderedDict([('graph', graph_id), ('n', g.n), ('m', g.m), ('numeric_mode', config.numeric_mode)])
    add_number(report, 'kemeny', by_resistance.kemeny)
    methods = {'resistance': number_fields(by_resistance.kemeny), 'hitting_time': None}
    exit_code = EXIT_SUCCESS
    if float_computation:
        report['methods_agree'] = None
    else:
        try:
            by_hitting_times = kemeny_hitting_oracle(g, config.num_workers)
            methods['hitting_time'] = number_fields(by_hitting_times.kemeny)
            report['methods_agree'] = by_hitting_times.kemeny == by_resistance.kemeny
        except KemenyConsistencyError as e:
            print('%s' % e, file=sys.stderr)
            report['methods_agree'] = False
        if not report['methods_agree']:
            exit_code = EXIT_VERIFICATION_FAILURE
    report['methods'] = methods
    if resistances:
        report['resistances'] = _matrix_fields(resistance_matrix(g, config.numeric_mode, config.float_cutoff))
    if moment_vertices:
        values = all_moments(g, config.numeric_mode, config.float_cutoff)
        report['moments'] = [dict(number_fields(values[v].value), vertex=v) for v in moment_vertices]
    return report, exit_code


@command
def compute(graph_path, resistances=False, moments=None, numeric_mode='exact', float_cutoff=_DEFAULT_FLOAT_CUTOFF,
            output_format='json'):
    """Compute Kemeny's constant of the graph in an edge-list file by both methods, printing a report.

    Arguments:
     * graph_path (str) - path of the edge-list file (see data.parse_edge_list for the format)
     * resistances (bool) - if True, the matrix of pairwise effective resistances is included
     * moments (str) - a vertex index or "all" to include the moments mu(G, v) of those vertices
     * numeric_mode (str) - exact or float. Float mode only applies to graphs above float_cutoff vertices
     * float_cutoff (int) - see numeric_mode
     * output_format (str) - json or table
    """
    def build_report():
        config = create_run_config(numeric_mode=numeric_mode, float_cutoff=float_cutoff, output_format=output_format)
        return build_compute_report(read_edge_list(graph_path), graph_path, resistances, moments, config)
    sys.exit(emit_report(build_report, output_format))


def _barbell_entry(parameters, shortcut_value, closed_form_only):
    entry = OrderedDict([('parameters', list(parameters))])
    add_number(entry, 'shortcut', shortcut_value)
    formula_value = kemeny_barbell(*parameters)
    add_number(entry, 'formula', formula_value)
    entry['shortcut_matches_formula'] = shortcut_value == formula_value
    entry['direct_matches'] = None
    if not closed_form_only:
        entry['direct_matches'] = kemeny(make_barbell(1, *parameters)) == formula_value
    return entry


def build_barbell_report(a=0, b=0, c=0, n=0, closed_form_only=False):
    """Report on B(1, a, b, c), or, if n is given, on the two barbells on n vertices and the sweep's maximiser."""
    report = OrderedDict()
    checks = []
    if n:
        thirds = _barbell_entry(barbell_thirds_parameters(n), kemeny_barbell_thirds(n), closed_form_only)
        best = _barbell_entry(barbell_best_parameters(n), kemeny_barbell_best(n), closed_form_only)
        sweep_parameters, sweep_value = best_barbell(n)
        report['n'] = n
        report['thirds'] = thirds
        report['best'] = best
        report['best_exceeds_thirds'] = kemeny_barbell_best(n) > kemeny_barbell_thirds(n)
        report['sweep_maximiser'] = dict(number_fields(sweep_value), parameters=list(sweep_parameters))
        report['sweep_matches_best'] = sweep_value == kemeny_barbell_best(n)
        checks.extend(entry[key] for entry in (thirds, best) for key in ('shortcut_matches_formula', 'direct_matches'))
    if a or b or c or not n:
        closed_form = kemeny_barbell(a, b, c)
        barbell = OrderedDict([('parameters', [a, b, c])])
        add_number(barbell, 'closed_form', closed_form)
        barbell['direct'] = barbell['direct_float'] = barbell['equal'] = None
        if not closed_form_only:
            add_number(barbell, 'direct', kemeny(make_barbell(1, a, b, c)))
            barbell['equal'] = barbell['direct'] == barbell['closed_form']
            checks.append(barbell['equal'])
        report['barbell'] = barbell
    exit_code = EXIT_VERIFICATION_FAILURE if any(check is False for check in checks) else EXIT_SUCCESS
    return report, exit_code


@command
def barbell(a=0, b=0, c=0, n=0, closed_form_only=False, output_format='json'):
    """Evaluate the closed form of Kemeny's constant of the barbell B(1, a, b, c) and compare it with the graph.

    Arguments:
     * a (int) - number of path vertices, at least 2
     * b (int) - the left clique is K_{b+1}, b at least 1
     * c (int) - the right clique is K_{c+1}, c at least 1
     * n (int) - if nonzero (a multiple of 3, at least 9), also report B(1, n/3, n/3, n/3), B(1, n/3+2, n/3-1, n/3-1)
                 and the barbell on n vertices with the largest Kemeny's constant. a, b and c may then be omitted
     * closed_form_only (bool) - if True, the direct computations are skipped
     * output_format (str) - json or table
    """
    def build_report():
        create_run_config(output_format=output_format)
        return build_barbell_report(a, b, c, n, closed_form_only)
    sys.exit(emit_report(build_report, output_format))


def build_braess_report(g, graph_id, mode, edges=None, max_set_size=2, max_non_edges=20, separation_vertex=-1,
                        config=None):
    """Scan g for Braess sets, or check a single edge set (optionally through a separation at a cut vertex)."""
    config = config or create_run_config(max_set_size=max_set_size, max_non_edges=max_non_edges, num_workers=1)
    report = OrderedDict([('graph', graph_id), ('mode', mode)])
    exit_code = EXIT_SUCCESS
    if mode == 'scan':
        reports = braess_scan(g, config.max_set_size, config.max_non_edges, config.num_workers, graph_id)
    elif mode == 'check':
        edge_set = parse_edge_str(edges)
        if not edge_set:
            raise ValueError('check mode needs --edges (e.g., "0-2,4-6")')
        reports = [braess_check(g, edge_set, graph_id)]
        if separation_vertex >= 0:
            separated = separated_check(g, separation_vertex, edge_set, graph_id)
            report['separated'] = report_to_dict(separated)
            report['separated_matches_direct'] = separated.delta_kemeny == reports[0].delta_kemeny
            if not report['separated_matches_direct']:
                exit_code = EXIT_VERIFICATION_FAILURE
    else:
        raise ValueError('Unknown mode %s (valid values: scan, check)' % mode)
    report['reports'] = [report_to_dict(braess_report) for braess_report in reports]
    report['braess_count'] = sum(braess_report.is_braess for braess_report in reports)
    report['is_braess'] = report['braess_count'] > 0
    return report, exit_code


@command
def braess(mode, graph_path, edges=None, max_set_size=2, max_non_edges=20, separation_vertex=-1,
           output_format='json'):
    """Scan a graph for Braess sets, or check whether a given set of non-edges is one.

    Arguments:
     * mode (str) - scan (every set of at most max_set_size non-edges) or check (the set given in edges)
     * graph_path (str) - path of the edge-list file
     * edges (str) - comma-separated list of dash-separated vertex pairs, e.g., "0-2,4-6" (check mode)
     * max_set_size (int) - largest edge set to scan
     * max_non_edges (int) - scans of graphs with more non-edges than this fail with exit code 3
     * separation_vertex (int) - in check mode, if non-negative, the change is also computed from the parts of the
                                 graph split at this cut vertex
     * output_format (str) - json or table
    """
    def build_report():
        config = create_run_config(max_set_size=max_set_size, max_non_edges=max_non_edges,
                                   output_format=output_format)
        return build_braess_report(read_edge_list(graph_path), graph_path, mode, edges, max_set_size, max_non_edges,
                                   separation_vertex, config)
    sys.exit(emit_report(build_report, output_format))

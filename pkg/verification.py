"""Invariant suites cross-checking every formula against direct computation, and the verify command.

Single-graph sweeps run over every labelled connected graph on up to max_n vertices, and the tree sweeps over every
labelled tree on up to tree_max_n. The pendant-triplet formulas use one graph per isomorphism class up to
corpus_max_n vertices (each triplet graph adds three), while the comparisons between variants run over every labelled
graph up to corpus_max_n. Sweeps over pairs of graphs use one graph per isomorphism class, up to pair_max_n vertices
each. Orders above 6 are sampled rather than enumerated.
"""

from collections import OrderedDict
from fractions import Fraction
import itertools
from random import Random
import sys
from time import time

from commandr import command
import networkx as nx

from braess import braess_scan, delta_kemeny_direct, delta_kemeny_separated, kn_path_composite, \
    kn_path_delta_kemeny, pendant_bound_monotonicity, pendant_star_bound, pendant_star_report, raw_pendant_bound
from closed_forms import FAMILY_NAME_TO_CLASS, PENDANT_GADGETS, barbell_best_parameters, \
    barbell_thirds_parameters, best_barbell, check_variant_comparisons, comparison_quantities, kemeny_barbell, \
    kemeny_barbell_best, kemeny_barbell_thirds, kemeny_k_pendants, kn_path_closed_form_results, pendant_gadget, \
    triplet_variants_direct, kemeny_triplet_variants
from enumeration import all_trees, connected_corpus, path_max_report, prufer_decode, prufer_encode, \
    random_connected_graph, random_chain, random_tree
from graphs import OneSumChain, attach_pendants, cut_vertices, is_connected, make_barbell, make_path, make_star, \
    one_sum
from kemeny import KemenyConsistencyError, kemeny, kemeny_hitting_oracle, summarize
from resistance import is_rayleigh_monotone, is_resistance_metric, mesh_star_equivalence, resistance_matrix, \
    verify_cut_vertex_resistance, verify_pseudoinverse, verify_star_with_extra_vertex
from separation import kemeny_at_cut_vertex, kemeny_chain, kemeny_chain_direct, kemeny_one_sep, \
    kemeny_one_sep_direct, kemeny_star_of_parts, kemeny_star_of_parts_direct, moment_chain, moment_chain_direct
from util import EXIT_SUCCESS, EXIT_VERIFICATION_FAILURE, create_run_config, emit_report, format_rational, \
    print_progress

_MAX_FAILURES_SHOWN = 5
_FAMILY_MAX_N = 20
_THIRDS_RANGE = range(9, 31, 3)
_TREE_ORACLE_MAX_N = 8
_RANDOM_ORACLE_MAX_N = 12
_PRUFER_ROUND_TRIP_MAX_N = 7


class CheckCounter(object):
    """Pass/total counts per named check, keeping the first few failure descriptions."""

    def __init__(self):
        self._checks = OrderedDict()
        self.notes = OrderedDict()

    def record(self, name, passed, detail=None):
        check = self._checks.setdefault(name, {'passed': 0, 'total': 0, 'failures': []})
        check['total'] += 1
        if passed:
            check['passed'] += 1
        elif len(check['failures']) < _MAX_FAILURES_SHOWN:
            check['failures'].append(detail() if callable(detail) else detail)

    @property
    def failed(self):
        return any(check['passed'] != check['total'] for check in self._checks.values())

    def to_dict(self):
        result = OrderedDict((name, dict(check)) for name, check in self._checks.items())
        if self.notes:
            result['notes'] = self.notes
        return result


def _graph_id(g):
    return '%r' % g


def _labelled_corpus(n_max, config, minimum_n=1):
    corpus = connected_corpus(n_max, samples_per_n=config.num_random_graphs, seed=config.seed)
    return [g for g in corpus if g.n >= minimum_n]


def _isomorphism_corpus(n_max, config, minimum_n=1):
    corpus = connected_corpus(n_max, up_to_isomorphism=True, samples_per_n=config.num_random_graphs, seed=config.seed)
    return [g for g in corpus if g.n >= minimum_n]


def verify_closed_forms(config, rnd):
    counter = CheckCounter()
    for family_name, family_class in sorted(FAMILY_NAME_TO_CLASS.items()):
        for n in range(2, _FAMILY_MAX_N + 1):
            family = family_class(n)
            summary = summarize(family.build())
            counter.record('family_kemeny', family.kemeny() == summary.kemeny, lambda: '%s n=%s' % (family_name, n))
            vertices = [0] if family_name == 'star' else range(n)
            for j in vertices:
                counter.record('family_moment', family.moment(j) == summary.moments[j],
                               lambda: '%s n=%s j=%s' % (family_name, n, j))
            counter.record('family_resistance',
                           all(family.resistance(i, j) == summary.resistances[i][j]
                               for i, j in itertools.combinations(range(n), 2)),
                           lambda: '%s n=%s' % (family_name, n))

    for a, b, c in itertools.product(range(2, 7), range(1, 6), range(1, 6)):
        value = kemeny_barbell(a, b, c)
        counter.record('barbell_formula', value == kemeny(make_barbell(1, a, b, c)), lambda: (a, b, c))
        counter.record('barbell_symmetry', value == kemeny_barbell(a, c, b), lambda: (a, b, c))
    for n in range(4, 12):
        counter.record('barbell_degenerates_to_path', kemeny_barbell(n - 2, 1, 1) == kemeny(make_path(n)), n)

    best_barbells = OrderedDict()
    for n in _THIRDS_RANGE:
        counter.record('barbell_thirds', kemeny_barbell_thirds(n) == kemeny_barbell(*barbell_thirds_parameters(n)), n)
        counter.record('barbell_best', kemeny_barbell_best(n) == kemeny_barbell(*barbell_best_parameters(n)), n)
        counter.record('barbell_best_exceeds_thirds', kemeny_barbell_best(n) > kemeny_barbell_thirds(n), n)
        sweep_parameters, sweep_value = best_barbell(n)
        best_barbells[str(n)] = {'sweep_parameters': list(sweep_parameters),
                                 'matches_shortcut': sweep_value == kemeny_barbell_best(n)}
    counter.notes['barbell_sweep_maximisers'] = best_barbells
    for n in (9, 12):
        counter.record('barbell_shortcuts_direct',
                       kemeny(make_barbell(1, *barbell_thirds_parameters(n))) == kemeny_barbell_thirds(n) and
                       kemeny(make_barbell(1, *barbell_best_parameters(n))) == kemeny_barbell_best(n), n)

    for n in range(2, 9):
        for result in kn_path_closed_form_results(n):
            counter.record('kn_path_constants', result.verified_against_direct, lambda: '%s n=%s' % (result.name, n))
    return counter


def verify_oracle(config, rnd):
    """Resistance formula against hitting times, moment-minus-Kemeny and the complete-graph minimum."""
    counter = CheckCounter()

    def check_graph(g, check_name):
        summary = summarize(g)
        try:
            oracle = kemeny_hitting_oracle(g)
            counter.record(check_name, oracle.kemeny == summary.kemeny, lambda: _graph_id(g))
        except KemenyConsistencyError as e:
            counter.record(check_name, False, str(e))
        counter.record('moment_at_least_kemeny', all(value >= summary.kemeny for value in summary.moments),
                       lambda: _graph_id(g))
        counter.record('complete_graph_minimises_kemeny',
                       Fraction((g.n - 1) ** 2, g.n) <= summary.kemeny, lambda: _graph_id(g))

    for n in range(2, min(config.tree_max_n, _TREE_ORACLE_MAX_N) + 1):
        for tree in all_trees(n):
            check_graph(tree, 'oracle_trees')
    for g in _labelled_corpus(config.max_n, config, minimum_n=2):
        check_graph(g, 'oracle_connected_corpus')
    for _ in range(config.num_random_graphs):
        check_graph(random_connected_graph(rnd, rnd.randint(2, _RANDOM_ORACLE_MAX_N)), 'oracle_random_graphs')
    return counter


def verify_resistance(config, rnd):
    counter = CheckCounter()
    for g in _labelled_corpus(config.max_n, config):
        resistances = resistance_matrix(g)
        counter.record('pseudoinverse_identities', verify_pseudoinverse(g), lambda: _graph_id(g))
        counter.record('resistance_metric', is_resistance_metric(resistances), lambda: _graph_id(g))
        for edge in g.non_edges():
            counter.record('rayleigh_monotonicity', is_rayleigh_monotone(g, [edge]), lambda: (_graph_id(g), edge))
        if g.m == g.n - 1:
            counter.record('tree_resistance_is_distance',
                           all(resistances[i, j] == length for i, lengths in
                               nx.all_pairs_shortest_path_length(g.to_networkx()) for j, length in lengths.items()),
                           lambda: _graph_id(g))
    corpus = _isomorphism_corpus(config.pair_max_n, config)
    for g1, g2 in itertools.product(corpus, repeat=2):
        for v1, v2 in itertools.product(range(g1.n), range(g2.n)):
            counter.record('cut_vertex_resistance', verify_cut_vertex_resistance(g1, v1, g2, v2),
                           lambda: (_graph_id(g1), v1, _graph_id(g2), v2))
    for _ in range(config.num_random_chains // 2):
        g1 = random_connected_graph(rnd, rnd.randint(1, 6))
        g2 = random_connected_graph(rnd, rnd.randint(1, 6))
        v1, v2 = rnd.randrange(g1.n), rnd.randrange(g2.n)
        counter.record('cut_vertex_resistance_random', verify_cut_vertex_resistance(g1, v1, g2, v2),
                       lambda: (_graph_id(g1), v1, _graph_id(g2), v2))
    for n in range(2, 9):
        counter.record('mesh_star', mesh_star_equivalence(n), n)
    for k in range(1, 7):
        for d in range(1, k + 1):
            counter.record('star_with_extra_vertex', verify_star_with_extra_vertex(k, d), (k, d))
    return counter


def verify_separation(config, rnd):
    counter = CheckCounter()
    corpus = _isomorphism_corpus(config.pair_max_n, config)
    for g1, g2 in itertools.product(corpus, repeat=2):
        if g1.m + g2.m == 0:
            continue
        for v1, v2 in itertools.product(range(g1.n), range(g2.n)):
            describe = lambda: (_graph_id(g1), v1, _graph_id(g2), v2)
            formula = kemeny_one_sep(g1, v1, g2, v2)
            counter.record('one_separation', formula == kemeny_one_sep_direct(g1, v1, g2, v2), describe)
            counter.record('one_separation_symmetry', formula == kemeny_one_sep(g2, v2, g1, v1), describe)
            chain = OneSumChain([(g1, None, v1), (g2, v2, None)])
            for v0 in range(g1.n):
                counter.record('moment_two_parts', moment_chain(chain, v0) == moment_chain_direct(chain, v0),
                               describe)
            counter.record('chain_two_parts', kemeny_chain(chain) == formula, describe)
    for g in _labelled_corpus(config.max_n, config, minimum_n=3):
        for v in sorted(cut_vertices(g)):
            counter.record('cut_vertex_split', kemeny_at_cut_vertex(g, v) == summarize(g).kemeny,
                           lambda: (_graph_id(g), v))

    for _ in range(config.num_random_chains):
        chain = random_chain(rnd)
        if sum(part.graph.m for part in chain) == 0:
            continue
        describe = lambda: repr(chain)
        counter.record('chain_random', kemeny_chain(chain) == kemeny_chain_direct(chain), describe)
        v0 = rnd.randrange(chain.parts[0].graph.n)
        counter.record('moment_chain_random', moment_chain(chain, v0) == moment_chain_direct(chain, v0), describe)
        shared = [(part.graph, part.attach_left if i else part.attach_right) for i, part in enumerate(chain)]
        star_value = kemeny_star_of_parts(shared)
        counter.record('star_of_parts_random', star_value == kemeny_star_of_parts_direct(shared), describe)
        counter.record('star_of_parts_is_chain',
                       star_value == kemeny_chain(OneSumChain.from_shared_vertex(shared)), describe)
    return counter


def verify_trees(config, rnd):
    counter = CheckCounter()
    for n in range(1, min(config.tree_max_n, 9) + 1):
        trees = all_trees(n)
        count = 0
        for tree in trees:
            count += 1
            counter.record('tree_shape', tree.m == tree.n - 1 and is_connected(tree), lambda: _graph_id(tree))
            if 2 <= n <= _PRUFER_ROUND_TRIP_MAX_N:
                counter.record('prufer_round_trip', prufer_decode(prufer_encode(tree)) == tree, lambda: _graph_id(tree))
        counter.record('tree_count', count == len(trees) == (n ** (n - 2) if n >= 2 else 1), n)
    sweeps = OrderedDict()
    for n in range(2, min(config.tree_max_n, 8) + 1):
        started = time()
        report = path_max_report(n, config.num_workers)
        print_progress('Path maximality sweep on %d trees (n=%d) took %.1fs' % (report['trees'], n, time() - started))
        counter.record('path_maximises_kemeny', report['kemeny']['holds'], n)
        counter.record('path_end_maximises_moment', report['moment']['holds'], n)
        sweeps[str(n)] = {'trees': report['trees'], 'kemeny_rechecks': report['kemeny']['exact_rechecks'],
                          'moment_rechecks': report['moment']['exact_rechecks'],
                          'max_kemeny': format_rational(report['kemeny']['max_value'])}
    counter.notes['path_max_sweeps'] = sweeps
    for _ in range(config.num_random_graphs // 4):
        tree = random_tree(rnd, rnd.randint(4, 12))
        twins = _twin_pendant_pairs(tree)
        for pair in twins:
            counter.record('twin_pendants_are_braess', delta_kemeny_direct(tree, [pair]) > 0,
                           lambda: (_graph_id(tree), pair))
    return counter


def _twin_pendant_pairs(g):
    leaves_by_neighbour = {}
    for v in range(g.n):
        if g.degree(v) == 1:
            leaves_by_neighbour.setdefault(g.neighbours(v)[0], []).append(v)
    return [pair for leaves in leaves_by_neighbour.values() for pair in itertools.combinations(leaves, 2)]


def verify_braess(config, rnd):
    counter = CheckCounter()
    path7 = make_path(7)
    witness = delta_kemeny_direct(path7, [(0, 2), (4, 6)])
    counter.record('path7_witness',
                   witness > 0 and delta_kemeny_direct(path7, [(0, 2)]) < 0 and
                   delta_kemeny_direct(path7, [(4, 6)]) < 0, format_rational(witness))
    scan = braess_scan(path7, 2, config.max_non_edges, config.num_workers, check_rayleigh=False)
    counter.record('path7_scan_finds_witness',
                   any(report.edge_set == ((0, 2), (4, 6)) and report.is_braess for report in scan))

    corpus = _isomorphism_corpus(config.pair_max_n, config)
    for g1, g2 in itertools.product(corpus, repeat=2):
        if g1.m + g2.m == 0:
            continue
        edge_sets = [edge_set for size in range(1, min(config.max_set_size, 2) + 1)
                     for edge_set in itertools.combinations(g2.non_edges(), size)]
        for v1, v2 in itertools.product(range(g1.n), range(g2.n)):
            composite = one_sum(g1, v1, g2, v2)[0]
            for edge_set in edge_sets:
                describe = lambda: (_graph_id(g1), v1, _graph_id(g2), v2, edge_set)
                report = delta_kemeny_separated(g1, v1, g2, v2, edge_set)
                counter.record('separated_matches_direct',
                               report.delta_kemeny == delta_kemeny_direct(composite, edge_set), describe)
                if report.sufficiency_condition_holds:
                    counter.record('sufficiency_no_false_positive', report.is_braess, describe)

    configurations = 0
    while configurations < config.num_random_graphs:
        k = rnd.randint(2, 5)
        l = rnd.randint(1, k * (k - 1) // 2)
        pendant_edges = rnd.sample(list(itertools.combinations(range(k), 2)), l)
        g1 = random_connected_graph(rnd, rnd.randint(2, 7))
        bound = pendant_star_bound(k, l).bound
        if g1.m <= bound:
            continue
        configurations += 1
        report = pendant_star_report(g1, rnd.randrange(g1.n), k, pendant_edges)
        counter.record('pendant_star_bound_sufficient', report.is_braess,
                       lambda: (_graph_id(g1), k, pendant_edges))
    counter.record('pendant_star_bound_l1', pendant_star_bound(2, 1).bound == 1)
    counter.record('raw_pendant_bound_k10_l1', 26 < raw_pendant_bound(10, 1) < 27, raw_pendant_bound(10, 1))
    monotonicity = pendant_bound_monotonicity(30)
    counter.notes['raw_bound_monotonicity'] = {'pairs_checked': monotonicity['pairs_checked'],
                                               'increasing': monotonicity['increasing'],
                                               'exceptions': [list(pair) for pair in monotonicity['exceptions']]}

    for g2 in _isomorphism_corpus(min(config.pair_max_n, 4), config, minimum_n=2):
        for v2 in range(g2.n):
            for edge in g2.non_edges():
                for n in (2, 3, 4):
                    counter.record('kn_path_delta',
                                   kn_path_delta_kemeny(n, g2, v2, [edge]) ==
                                   delta_kemeny_direct(kn_path_composite(n, g2, v2), [edge]),
                                   lambda: (n, _graph_id(g2), v2, edge))
    return counter


def verify_triplets(config, rnd):
    counter = CheckCounter()
    for name, (kemeny_value, moment_value) in PENDANT_GADGETS.items():
        summary = summarize(pendant_gadget(name))
        counter.record('gadget_constants', summary.kemeny == kemeny_value and summary.moments[0] == moment_value,
                       name)
    for g in _isomorphism_corpus(config.corpus_max_n, config, minimum_n=2):
        for v in range(g.n):
            counter.record('triplet_formulas', kemeny_triplet_variants(g, v) == triplet_variants_direct(g, v),
                           lambda: (_graph_id(g), v))
            for k in (1, 2, 3):
                counter.record('k_pendants', kemeny_k_pendants(g, v, k) == kemeny(attach_pendants(g, v, k)),
                               lambda: (_graph_id(g), v, k))
    for g in _labelled_corpus(config.corpus_max_n, config, minimum_n=2):
        for v in range(g.n):
            for name, check in check_variant_comparisons(g, v).items():
                counter.record('comparison_%s' % name, check.holds, lambda: (_graph_id(g), v))
    star_quantity = comparison_quantities(3, Fraction(5, 2), Fraction(3))['hat_over_tilde']
    counter.record('star_centre_counterexample', star_quantity == -38 and
                   kemeny_triplet_variants(make_star(4), 0).hat < kemeny_triplet_variants(make_star(4), 0).tilde,
                   format_rational(star_quantity))
    path2_variants = kemeny_triplet_variants(make_path(2), 0)
    counter.record('path2_equality', path2_variants.bar == path2_variants.star < path2_variants.hat <
                   path2_variants.tilde)
    return counter


SUITES = OrderedDict([
    ('closed-forms', verify_closed_forms),
    ('oracle', verify_oracle),
    ('resistance', verify_resistance),
    ('separation', verify_separation),
    ('trees', verify_trees),
    ('braess', verify_braess),
    ('triplets', verify_triplets),
])


def build_verification_report(suite, config):
    """Run the named suite (or all of them) and return the report with its exit code.

    Every suite gets its own random.Random(seed), so a suite's results don't depend on which other suites ran.
    """
    if suite != 'all' and suite not in SUITES:
        raise ValueError('Unknown suite %s (valid values: all, %s)' % (suite, ', '.join(SUITES)))
    names = list(SUITES) if suite == 'all' else [suite]
    report = OrderedDict([('suite', suite), ('seed', config.seed), ('max_n', config.max_n),
                          ('tree_max_n', config.tree_max_n), ('corpus_max_n', config.corpus_max_n),
                          ('pair_max_n', config.pair_max_n), ('max_set_size', config.max_set_size)])
    failed = False
    results = OrderedDict()
    for name in names:
        started = time()
        counter = SUITES[name](config, Random(config.seed))
        print_progress('Suite %s finished in %.1fs' % (name, time() - started))
        results[name] = counter.to_dict()
        failed = failed or counter.failed
    report['suites'] = results
    report['passed'] = not failed
    return report, EXIT_VERIFICATION_FAILURE if failed else EXIT_SUCCESS


@command
def verify(suite='all', max_n=5, tree_max_n=8, corpus_max_n=6, pair_max_n=5, max_set_size=2, max_non_edges=20, seed=0,
           num_random_graphs=200, num_random_chains=100, output_format='json'):
    """Run invariant suites, printing per-check pass counts. Exits with code 1 if any check fails.

    Orders up to 6 are swept exhaustively. A larger vertex cap adds num_random_graphs seeded samples per order.

    Arguments:
     * suite (str) - closed-forms, oracle, resistance, separation, trees, braess, triplets or all
     * max_n (int) - vertex cap of the labelled single-graph sweeps (oracle, resistance, separation)
     * tree_max_n (int) - vertex cap of the labelled tree sweeps (the oracle and extremality sweeps stop at 8)
     * corpus_max_n (int) - vertex cap of the pendant-triplet formula and comparison sweeps
     * pair_max_n (int) - vertex cap of each graph in the sweeps over pairs of graphs
     * max_set_size (int) - largest edge set in the Braess decomposition sweep (at most 2)
     * max_non_edges (int) - non-edge cap of Braess scans
     * seed (int) - seed of the random graphs and chains. Identical arguments produce identical output
     * num_random_graphs (int) - number of random graphs in the oracle sweep and random pendant-star configurations
     * num_random_chains (int) - number of random 1-sum chains
     * output_format (str) - json or table
    """
    def build_report():
        config = create_run_config(max_n=max_n, tree_max_n=tree_max_n, corpus_max_n=corpus_max_n,
                                   pair_max_n=pair_max_n, max_set_size=max_set_size, max_non_edges=max_non_edges,
                                   seed=seed, num_random_graphs=num_random_graphs,
                                   num_random_chains=num_random_chains, output_format=output_format)
        return build_verification_report(suite, config)
    sys.exit(emit_report(build_report, output_format))

"""Braess edges and sets: non-edges whose addition increases Kemeny's constant.

The direct change in Kemeny's constant is the source of truth for scans. For graphs with a 1-separation G1 (+)_v G2
and an edge set inside G2, the change also decomposes as

    l m1 (mu(G1, v) - K(G1)) / (m (m + l)) + (A m1^2 + ((A + C) m2 + B l) m1 + C (m2^2 + l m2)) / (m (m + l))

with A = mu(G2', v) - mu(G2, v), B = K(G2') - mu(G2, v) and C = K(G2') - K(G2), where G2' is G2 plus the edges. The
first term is never negative, so a positive second numerator is sufficient for a Braess set.
"""

from collections import namedtuple
from fractions import Fraction
import itertools
from math import isqrt

import numpy as np

from closed_forms import kemeny_kn_path, moment_kn_path
from graphs import GraphError, add_edges, attach_pendants, canonical_edge, make_kn_path, one_sum
from kemeny import check_kemeny_input, summarize
from resistance import is_rayleigh_monotone
from separation import split_at_cut_vertex
from util import CapExceededError, add_number, format_rational, number_fields, parallel_map

_DEFAULT_MAX_NON_EDGES = 20
_BOUND_SCALE = 10 ** 6

BraessTerms = namedtuple('BraessTerms', ('A', 'B', 'C'))
BraessReport = namedtuple('BraessReport', ('graph', 'separation', 'edge_set', 'l', 'delta_kemeny', 'terms',
                                           'is_braess', 'sufficiency_condition_holds', 'resistances_nonincreasing'))
SeparationInfo = namedtuple('SeparationInfo', ('v1', 'v2', 'g1', 'g2'))
PendantStarBound = namedtuple('PendantStarBound', ('k', 'l', 'bound', 'exact'))
PendantStarReport = namedtuple('PendantStarReport', ('k', 'l', 'm1', 'bound', 'above_bound', 'delta_kemeny',
                                                     'is_braess'))


class SearchSpaceError(CapExceededError):
    """Raised when a Braess scan would examine more non-edges than allowed."""


def canonical_edge_set(edge_set):
    """Sorted tuple of (min, max) pairs, rejecting self-loops and repeated pairs."""
    edges = []
    for u, v in edge_set:
        u, v = int(u), int(v)
        if u == v:
            raise GraphError('Self-loop at vertex %s' % u)
        edges.append(canonical_edge(u, v))
    if len(set(edges)) != len(edges):
        raise GraphError('Edge set %s has duplicates' % (sorted(edges), ))
    return tuple(sorted(edges))


def delta_kemeny_direct(g, edge_set):
    """K(g + edge_set) - K(g), computed on both graphs."""
    edge_set = canonical_edge_set(edge_set)
    check_kemeny_input(g)
    augmented = add_edges(g, edge_set)
    if not edge_set:
        return Fraction(0)
    return summarize(augmented).kemeny - summarize(g).kemeny


def _direct_report(g, edge_set, graph_id=None, check_rayleigh=True):
    edge_set = canonical_edge_set(edge_set)
    delta = delta_kemeny_direct(g, edge_set)
    return BraessReport(graph=graph_id, separation=None, edge_set=edge_set, l=len(edge_set), delta_kemeny=delta,
                        terms=None, is_braess=delta > 0, sufficiency_condition_holds=None,
                        resistances_nonincreasing=is_rayleigh_monotone(g, edge_set) if check_rayleigh else None)


def braess_check(g, edge_set, graph_id=None):
    """Direct Braess report for a single edge set."""
    return _direct_report(g, edge_set, graph_id)


def delta_kemeny_separated(g1, v1, g2, v2, edge_set, graph_id=None, check_rayleigh=False):
    """BraessReport for adding edge_set (non-edges of g2, in g2's labels) to the 1-sum of g1 and g2 at v1 = v2.

    g2 keeps its labels in the 1-sum (see graphs.one_sum), so edge_set is also in the composite's labels.
    """
    g1.check_vertex(v1)
    g2.check_vertex(v2)
    edge_set = canonical_edge_set(edge_set)
    for u, w in edge_set:
        if not (0 <= u < g2.n and 0 <= w < g2.n):
            raise GraphError('Edge (%s, %s) is not inside the second part of the separation' % (u, w))
    augmented = add_edges(g2, edge_set)
    summary1, summary2, summary2_augmented = summarize(g1), summarize(g2), summarize(augmented)
    m1, m2, l = summary1.m, summary2.m, len(edge_set)
    m = m1 + m2
    if m == 0:
        raise ValueError('Both parts of the separation are single vertices')
    terms = BraessTerms(A=summary2_augmented.moments[v2] - summary2.moments[v2],
                        B=summary2_augmented.kemeny - summary2.moments[v2],
                        C=summary2_augmented.kemeny - summary2.kemeny)
    first_term = Fraction(l * m1 * (summary1.moments[v1] - summary1.kemeny), m * (m + l))
    assert first_term >= 0, 'The first term %s is negative' % first_term
    second_numerator = (terms.A * m1 ** 2 + ((terms.A + terms.C) * m2 + terms.B * l) * m1 +
                        terms.C * (m2 ** 2 + l * m2))
    delta = first_term + Fraction(second_numerator) / (m * (m + l))
    rayleigh = None
    if check_rayleigh:
        rayleigh = is_rayleigh_monotone(one_sum(g1, v1, g2, v2)[0], edge_set)
    return BraessReport(graph=graph_id, separation=SeparationInfo(v1=v1, v2=v2, g1=g1, g2=g2), edge_set=edge_set,
                        l=l, delta_kemeny=delta, terms=terms, is_braess=delta > 0,
                        sufficiency_condition_holds=second_numerator > 0, resistances_nonincreasing=rayleigh)


def separated_check(g, v, edge_set, graph_id=None):
    """Separated BraessReport for edge_set in g, splitting g at its cut vertex v.

    The edge set must lie within one side of the split, which becomes the second part. The returned report's edge
    set is in g's labels.
    """
    edge_set = canonical_edge_set(edge_set)
    separation = split_at_cut_vertex(g, v)
    sides = [(separation.g1, separation.v1, separation.g1_vertices),
             (separation.g2, separation.v2, separation.g2_vertices)]
    for (other, other_v, _), (side, side_v, side_vertices) in [(sides[1], sides[0]), (sides[0], sides[1])]:
        index = {u: i for i, u in enumerate(side_vertices)}
        if all(a in index and b in index for a, b in edge_set):
            report = delta_kemeny_separated(other, other_v, side, side_v, [(index[a], index[b]) for a, b in edge_set],
                                            graph_id)
            return report._replace(edge_set=edge_set)
    raise GraphError('Edge set %s crosses the separation at vertex %s' % (list(edge_set), v))


def _bound_parts(k, l):
    if k < 1 or l < 1:
        raise ValueError('Need k >= 1 and l >= 1 (got k=%s, l=%s)' % (k, l))
    if l > k * (k - 1) // 2:
        raise ValueError('At most %s edges can be added among %s pendants (got l=%s)' % (k * (k - 1) // 2, k, l))
    if l < k:
        return 33 * l ** 2 + 50 * l + 17, l
    return 33 * k ** 2 - 30 * k + 1, k


def pendant_star_bound(k, l):
    """Edge count of G1 above which any l edges added among k pendants at v form a Braess set.

    The bound is (sqrt(33 l^2 + 50 l + 17) - l - 1) / 8 for l < k, and (sqrt(33 k^2 - 30 k + 1) - k - 1) / 8
    otherwise. When the square root is irrational the returned bound is the real value rounded up to a multiple of
    1e-6, so m1 > bound still guarantees a Braess set.
    """
    radicand, x = _bound_parts(k, l)
    root = isqrt(radicand)
    if root * root == radicand:
        return PendantStarBound(k=k, l=l, bound=Fraction(root - x - 1, 8), exact=True)
    scaled_root_floor = isqrt(radicand * _BOUND_SCALE ** 2)
    ceiling = (scaled_root_floor - (x + 1) * _BOUND_SCALE) // 8 + 1
    return PendantStarBound(k=k, l=l, bound=Fraction(ceiling, _BOUND_SCALE), exact=False)


def simplified_pendant_bound(k, l):
    """Float value of the piecewise bound, without rounding up."""
    radicand, x = _bound_parts(k, l)
    return (np.sqrt(radicand) - x - 1) / 8


def raw_pendant_bound(k, l):
    """The unsimplified threshold on m1, which grows with k for fixed l."""
    if k < 1 or l < 1:
        raise ValueError('Need k >= 1 and l >= 1 (got k=%s, l=%s)' % (k, l))
    radicand = k * (k ** 3 - 16 * l ** 2 + 2 * k ** 2 * (6 * l - 1) + k * (20 * l ** 2 - 12 * l + 1))
    return (k ** 2 - 2 * k * l - k + np.sqrt(radicand)) / (8 * l)


def pendant_bound_monotonicity(max_k=30):
    """Count the (l, k) pairs, 1 <= l < k < max_k, where the raw bound increases from k to k + 1."""
    increasing, checked, exceptions = 0, 0, []
    for l in range(1, max_k):
        for k in range(l + 1, max_k):
            checked += 1
            if raw_pendant_bound(k + 1, l) > raw_pendant_bound(k, l):
                increasing += 1
            else:
                exceptions.append((l, k))
    return {'pairs_checked': checked, 'increasing': increasing, 'exceptions': exceptions}


def pendant_star_graph(g1, v, k, pendant_edges=()):
    """g1 with k pendants at v plus edges among them. Pendants are indexed 0..k-1 in pendant_edges."""
    graph = attach_pendants(g1, v, k)
    for a, b in pendant_edges:
        if not (0 <= a < k and 0 <= b < k):
            raise GraphError('Pendant index out of 0..%s in (%s, %s)' % (k - 1, a, b))
    return graph, canonical_edge_set((g1.n + a, g1.n + b) for a, b in pendant_edges)


def pendant_star_report(g1, v, k, pendant_edges):
    """Compare the change in Kemeny's constant with the pendant-star bound for one configuration."""
    graph, edge_set = pendant_star_graph(g1, v, k, pendant_edges)
    bound = pendant_star_bound(k, len(edge_set))
    delta = delta_kemeny_direct(graph, edge_set)
    return PendantStarReport(k=k, l=len(edge_set), m1=g1.m, bound=bound.bound, above_bound=g1.m > bound.bound,
                             delta_kemeny=delta, is_braess=delta > 0)


def kn_path_delta_kemeny(n, g2, v2, edge_set):
    """Change in Kemeny's constant when edge_set is added to G2 in (K_n (+) P_n) (+) G2, glued at the path end.

    The K_n (+) P_n side uses its closed forms, so this is independent of the composite's resistances.
    """
    edge_set = canonical_edge_set(edge_set)
    summary2, summary2_augmented = summarize(g2), summarize(add_edges(g2, edge_set))
    m1 = n * (n - 1) // 2 + n - 1
    m2, l = summary2.m, len(edge_set)
    m = m1 + m2
    A = summary2_augmented.moments[v2] - summary2.moments[v2]
    B = summary2_augmented.kemeny - summary2.moments[v2]
    C = summary2_augmented.kemeny - summary2.kemeny
    numerator = (l * m1 * (moment_kn_path(n) - kemeny_kn_path(n)) + A * m1 ** 2 + ((A + C) * m2 + B * l) * m1 +
                 C * (m2 ** 2 + l * m2))
    return Fraction(numerator) / (m * (m + l))


def smallest_braess_kn_path(g2, v2, edge_set, max_n=40):
    """Smallest n <= max_n for which edge_set is Braess in (K_n (+) P_n) (+) G2, or None."""
    for n in range(2, max_n + 1):
        if kn_path_delta_kemeny(n, g2, v2, edge_set) > 0:
            return n
    return None


def kn_path_composite(n, g2, v2):
    """(K_n (+) P_n) (+) G2 glued at the path's free end and v2; G2 keeps its labels."""
    g1, end = make_kn_path(n)
    return one_sum(g1, end, g2, v2)[0]


def _scan_job(job):
    g, edge_set, graph_id, check_rayleigh = job
    return _direct_report(g, edge_set, graph_id, check_rayleigh)


def braess_scan(g, max_set_size, max_non_edges=_DEFAULT_MAX_NON_EDGES, num_workers=1, graph_id=None,
                check_rayleigh=True):
    """Exact change in Kemeny's constant for every set of at most max_set_size non-edges of g.

    Reports are sorted by the change, largest first, with ties broken by the canonical edge sets. Raises
    SearchSpaceError if g has more than max_non_edges non-edges.
    """
    if max_set_size < 1:
        raise ValueError('max_set_size must be at least 1 (got %s)' % max_set_size)
    check_kemeny_input(g)
    non_edges = g.non_edges()
    if len(non_edges) > max_non_edges:
        raise SearchSpaceError('%d non-edges exceed the limit of %d' % (len(non_edges), max_non_edges))
    jobs = [(g, edge_set, graph_id, check_rayleigh)
            for size in range(1, min(max_set_size, len(non_edges)) + 1)
            for edge_set in itertools.combinations(non_edges, size)]
    reports = parallel_map(_scan_job, jobs, num_workers)
    return sorted(reports, key=lambda report: (-report.delta_kemeny, report.edge_set))


def braess_edges(g, max_non_edges=_DEFAULT_MAX_NON_EDGES, num_workers=1):
    """The single non-edges of g that are Braess edges, in canonical order."""
    reports = braess_scan(g, 1, max_non_edges, num_workers, check_rayleigh=False)
    return sorted(report.edge_set[0] for report in reports if report.is_braess)


def report_to_dict(report):
    """JSON-ready form of a BraessReport: exact numbers as "p/q" strings with float approximations."""
    result = {
        'graph': report.graph,
        'edge_set': [list(edge) for edge in report.edge_set],
        'l': report.l,
        'is_braess': report.is_braess,
        'sufficient': report.sufficiency_condition_holds,
        'resistances_nonincreasing': report.resistances_nonincreasing,
        'terms': None,
        'separation': None,
    }
    add_number(result, 'delta', report.delta_kemeny)
    if report.terms is not None:
        result['terms'] = {name: number_fields(value) for name, value in report.terms._asdict().items()}
    if report.separation is not None:
        result['separation'] = {'v1': report.separation.v1, 'v2': report.separation.v2,
                                'g1_edges': [list(edge) for edge in report.separation.g1.edges],
                                'g2_edges': [list(edge) for edge in report.separation.g2.edges]}
    return result


def pendant_bound_to_dict(bound):
    return {'k': bound.k, 'l': bound.l, 'bound': format_rational(bound.bound), 'bound_float': float(bound.bound),
            'exact': bound.exact}

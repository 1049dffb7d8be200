"""Kemeny's constant and vertex moments of simple connected graphs.

Two independent methods compute Kemeny's constant: the resistance formula K(G) = d^T R d / 4m, and a hitting-time
oracle that solves for mean first passage times of the random walk and averages them over the stationary
distribution pi_j = d_j / 2m.
"""

from collections import namedtuple
from fractions import Fraction
from functools import lru_cache

import numpy as np

from graphs import DisconnectedGraphError, is_connected
from resistance import identity_matrix, resistance_matrix, solve
from util import parallel_map

_DEFAULT_FLOAT_CUTOFF = 64

KemenyReport = namedtuple('KemenyReport', ('kemeny', 'm', 'method', 'per_start_values'))
MomentValue = namedtuple('MomentValue', ('vertex', 'value'))
PartSummary = namedtuple('PartSummary', ('m', 'kemeny', 'moments', 'resistances'))


class KemenyInputError(ValueError):
    """Raised for graphs that Kemeny's constant isn't computed for (weighted or single-vertex graphs)."""


class KemenyConsistencyError(AssertionError):
    """Raised when two computations that must agree don't. This indicates a bug, not bad input."""


def check_kemeny_input(g, allow_single_vertex=False):
    if g.is_weighted:
        raise KemenyInputError('Kemeny\'s constant is only computed for unweighted graphs')
    if not is_connected(g):
        raise DisconnectedGraphError()
    if g.n < 2 and not allow_single_vertex:
        raise KemenyInputError('Kemeny\'s constant needs at least two vertices (got a single vertex)')


def _degree_vector(g):
    return np.array(g.degrees, dtype=object)


def kemeny_from_resistances(g, resistances):
    return _degree_vector(g).dot(resistances).dot(_degree_vector(g)) / (4 * g.m)


def kemeny_resistance(g, numeric_mode='exact', float_cutoff=_DEFAULT_FLOAT_CUTOFF):
    check_kemeny_input(g)
    resistances = resistance_matrix(g, numeric_mode, float_cutoff)
    return KemenyReport(kemeny=kemeny_from_resistances(g, resistances), m=g.m, method='resistance',
                        per_start_values=None)


def transition_matrix(g):
    """P = D^-1 W of the simple random walk on g, as an exact matrix."""
    transitions = np.array([[Fraction(0)] * g.n for _ in range(g.n)], dtype=object)
    for u in range(g.n):
        for v in g.neighbours(u):
            transitions[u, v] = Fraction(1, g.degree(u))
    return transitions


def _hitting_times_to(job):
    """Mean first passage times from every vertex to the target: m[t] = 0, m[i] = 1 + sum_k P[i, k] m[k]."""
    transitions, target = job
    n = transitions.shape[0]
    system = identity_matrix(n) - transitions
    system[target, :] = Fraction(0)
    system[target, target] = Fraction(1)
    rhs = np.array([Fraction(1)] * n, dtype=object)
    rhs[target] = Fraction(0)
    return solve(system, rhs)


def kemeny_hitting_oracle(g, num_workers=1):
    """Compute Kemeny's constant as sum_j pi_j m_ij from every start vertex i.

    Raises KemenyConsistencyError if the start vertices disagree.
    """
    check_kemeny_input(g)
    transitions = transition_matrix(g)
    columns = parallel_map(_hitting_times_to, [(transitions, target) for target in range(g.n)], num_workers)
    passage_times = np.column_stack(columns)
    stationary = np.array([Fraction(degree, 2 * g.m) for degree in g.degrees], dtype=object)
    per_start_values = tuple(passage_times.dot(stationary))
    if len(set(per_start_values)) != 1:
        raise KemenyConsistencyError('Hitting-time values depend on the start vertex: %s' % (per_start_values, ))
    return KemenyReport(kemeny=per_start_values[0], m=g.m, method='hitting_time', per_start_values=per_start_values)


def kemeny(g):
    """Exact Kemeny's constant by the resistance formula."""
    return kemeny_resistance(g).kemeny


def check_methods_agree(g):
    """Run both methods and return their common value, raising KemenyConsistencyError if they differ."""
    by_resistance = kemeny_resistance(g).kemeny
    by_hitting_times = kemeny_hitting_oracle(g).kemeny
    if by_resistance != by_hitting_times:
        raise KemenyConsistencyError('Resistance formula gives %s but hitting times give %s for %r' %
                                     (by_resistance, by_hitting_times, g))
    return by_resistance


def moment_from_resistances(g, resistances, v):
    return _degree_vector(g).dot(resistances[:, v])


def moment(g, v, numeric_mode='exact', float_cutoff=_DEFAULT_FLOAT_CUTOFF):
    """Return the moment mu(G, v) = sum_i d_i r(i, v) as a MomentValue."""
    check_kemeny_input(g, allow_single_vertex=True)
    g.check_vertex(v)
    resistances = resistance_matrix(g, numeric_mode, float_cutoff)
    return MomentValue(vertex=v, value=moment_from_resistances(g, resistances, v))


def all_moments(g, numeric_mode='exact', float_cutoff=_DEFAULT_FLOAT_CUTOFF):
    check_kemeny_input(g, allow_single_vertex=True)
    resistances = resistance_matrix(g, numeric_mode, float_cutoff)
    return tuple(MomentValue(vertex=v, value=moment_from_resistances(g, resistances, v)) for v in range(g.n))


def moment_minus_kemeny(g, v):
    """Return mu(G, v) - K(G), which is never negative."""
    summary = summarize(g)
    g.check_vertex(v)
    gap = summary.moments[v] - summary.kemeny
    assert gap >= 0, 'Moment %s at vertex %s is below Kemeny\'s constant %s' % (summary.moments[v], v, summary.kemeny)
    return gap


@lru_cache(maxsize=4096)
def summarize(g):
    """Exact edge count, Kemeny's constant, moments and resistances of g, cached per graph.

    A single vertex has no edges, so its Kemeny's constant is taken to be 0 (it contributes nothing to the
    decomposition formulas that use these summaries).
    """
    check_kemeny_input(g, allow_single_vertex=True)
    resistances = resistance_matrix(g)
    moments = tuple(moment_from_resistances(g, resistances, v) for v in range(g.n))
    kemeny_value = kemeny_from_resistances(g, resistances) if g.n > 1 else Fraction(0)
    return PartSummary(m=g.m, kemeny=kemeny_value, moments=moments,
                       resistances=tuple(tuple(row) for row in resistances))

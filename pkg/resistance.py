"""Exact linear algebra over fractions, Laplacian pseudoinverses and effective resistances.

Exact matrices are numpy arrays of dtype=object holding fractions.Fraction entries. Float matrices are plain float64
arrays, used only in float mode for graphs larger than the float cutoff.
"""

from fractions import Fraction
import itertools

import numpy as np

from graphs import Graph, DisconnectedGraphError, add_edges, is_connected, make_complete, one_sum
from util import NUMERIC_MODES

_DEFAULT_FLOAT_CUTOFF = 64


class SingularMatrixError(ValueError):
    pass


def identity_matrix(n):
    return np.array([[Fraction(int(i == j)) for j in range(n)] for i in range(n)], dtype=object)


def to_fraction_matrix(values):
    """Convert a nested sequence (or array) of numbers to an exact object array."""
    matrix = np.array(values, dtype=object)
    return np.vectorize(Fraction, otypes=[object])(matrix) if matrix.size else matrix


def _gauss_jordan(matrix, rhs):
    """Reduce [matrix | rhs] to [I | X] in place, pivoting on the entry of largest absolute value, and return X."""
    n = matrix.shape[0]
    if matrix.shape != (n, n) or rhs.shape[0] != n:
        raise ValueError('Expected a square matrix and a matching right-hand side (got %s and %s)' %
                         (matrix.shape, rhs.shape))
    for i in range(n):
        pivot_row = max(range(i, n), key=lambda j: abs(matrix[j, i]))
        if matrix[pivot_row, i] == 0:
            raise SingularMatrixError('Matrix is singular (no pivot in column %d)' % i)
        if pivot_row != i:
            matrix[[i, pivot_row]] = matrix[[pivot_row, i]]
            rhs[[i, pivot_row]] = rhs[[pivot_row, i]]
        pivot = matrix[i, i]
        matrix[i, :] /= pivot
        rhs[i, :] /= pivot
        for j in range(n):
            if j != i and matrix[j, i] != 0:
                factor = matrix[j, i]
                matrix[j, :] -= factor * matrix[i, :]
                rhs[j, :] -= factor * rhs[i, :]
    return rhs


def invert(matrix):
    """Exact inverse of a square fraction matrix by Gauss-Jordan elimination."""
    matrix = to_fraction_matrix(matrix)
    return _gauss_jordan(matrix, identity_matrix(matrix.shape[0]))


def solve(matrix, rhs):
    """Exactly solve matrix * x = rhs, where rhs is a vector or a matrix of right-hand sides."""
    matrix = to_fraction_matrix(matrix)
    rhs = to_fraction_matrix(rhs)
    if rhs.ndim == 1:
        return _gauss_jordan(matrix, rhs.reshape(-1, 1))[:, 0]
    return _gauss_jordan(matrix, rhs)


def laplacian(g, exact=True):
    """Return L = D - W for the (weighted) adjacency matrix W of g."""
    if exact:
        matrix = np.array([[Fraction(0)] * g.n for _ in range(g.n)], dtype=object)
    else:
        matrix = np.zeros((g.n, g.n))
    for (u, v), weight in g.weights.items():
        weight = weight if exact else float(weight)
        matrix[u, v] -= weight
        matrix[v, u] -= weight
        matrix[u, u] += weight
        matrix[v, v] += weight
    return matrix


def laplacian_pinv(g):
    """Exact Moore-Penrose pseudoinverse of the Laplacian of a connected graph, as (L + J/n)^-1 - J/n."""
    if not is_connected(g):
        raise DisconnectedGraphError()
    shift = Fraction(1, g.n)
    return invert(laplacian(g) + shift) - shift


def _resistances_from_pinv(pinv):
    diagonal = np.diag(pinv)
    return diagonal[:, None] + diagonal[None, :] - 2 * pinv


def float_resistance_matrix(g):
    if not is_connected(g):
        raise DisconnectedGraphError()
    return _resistances_from_pinv(np.linalg.pinv(laplacian(g, exact=False), hermitian=True))


def resistance_matrix(g, numeric_mode='exact', float_cutoff=_DEFAULT_FLOAT_CUTOFF):
    """Return the matrix of pairwise effective resistances of a connected graph.

    Arguments:
     * g (Graph) - connected graph; edge weights are conductances
     * numeric_mode (str) - 'exact' (fractions) or 'float'. Float mode only applies to graphs with more than
                            float_cutoff vertices, and smaller graphs are still computed exactly
     * float_cutoff (int) - see numeric_mode
    """
    if numeric_mode not in NUMERIC_MODES:
        raise ValueError('Unknown numeric mode %s (valid values: %s)' % (numeric_mode, ', '.join(NUMERIC_MODES)))
    if numeric_mode == 'float' and g.n > float_cutoff:
        return float_resistance_matrix(g)
    return _resistances_from_pinv(laplacian_pinv(g))


def verify_pseudoinverse(g):
    """Check L L+ L = L, L+ L L+ = L+ and L+ 1 = 0 exactly."""
    matrix = laplacian(g)
    pinv = laplacian_pinv(g)
    ones = np.array([Fraction(1)] * g.n, dtype=object)
    return bool(np.all(matrix.dot(pinv).dot(matrix) == matrix) and np.all(pinv.dot(matrix).dot(pinv) == pinv) and
                np.all(pinv.dot(ones) == 0))


def is_resistance_metric(resistances):
    """Check symmetry, zero diagonal, non-negativity and the triangle inequality."""
    n = resistances.shape[0]
    if not np.all(resistances == resistances.T) or any(resistances[i, i] != 0 for i in range(n)):
        return False
    if any(resistances[i, j] < 0 for i, j in itertools.combinations(range(n), 2)):
        return False
    return all(resistances[i, k] <= resistances[i, j] + resistances[j, k]
               for i, j, k in itertools.product(range(n), repeat=3))


def verify_cut_vertex_resistance(g1, v1, g2, v2):
    """Check that resistances add across the cut vertex of the 1-sum of g1 and g2."""
    graph, g1_map = one_sum(g1, v1, g2, v2)
    resistances = resistance_matrix(graph)
    resistances1 = resistance_matrix(g1)
    resistances2 = resistance_matrix(g2)
    return all(resistances[g1_map[i], j] == resistances1[i, v1] + resistances2[v2, j]
               for i in range(g1.n) for j in range(g2.n))


def weighted_star(n, conductance):
    """Star with centre 0 and n leaves, every edge having the given conductance."""
    return Graph(n + 1, [(0, leaf) for leaf in range(1, n + 1)],
                 {(0, leaf): conductance for leaf in range(1, n + 1)})


def mesh_star_equivalence(n):
    """Check that K_n with unit resistors matches the star with resistance 1/n per edge between every two leaves."""
    if n < 2:
        raise ValueError('n must be at least 2 (got %s)' % n)
    star_resistances = resistance_matrix(weighted_star(n, n))
    complete_resistances = resistance_matrix(make_complete(n))
    return all(star_resistances[i + 1, j + 1] == complete_resistances[i, j] == Fraction(2, n)
               for i, j in itertools.combinations(range(n), 2))


def star_with_extra_vertex_resistance(k, d):
    """Resistance (k + d) / (d (k + 1)) from a vertex of degree d to a neighbour inside the mesh of k pendants."""
    if not 1 <= d <= k:
        raise ValueError('Need 1 <= d <= k (got k=%s, d=%s)' % (k, d))
    return Fraction(k + d, d * (k + 1))


def star_with_extra_vertex_networks(k, d):
    """Return the two networks whose (extra vertex, v) resistance is star_with_extra_vertex_resistance(k, d).

    The first is unweighted: v = 0 and k - 1 other vertices form K_k, and vertex k is joined to 0..d-1. The second is
    its mesh-star transform: a star with centre k + 1, leaves 0..k-1 and conductance k per edge, with vertex k joined
    to 0..d-1 by unit edges. Each network is returned with its (extra vertex, v) pair.
    """
    if not 1 <= d <= k:
        raise ValueError('Need 1 <= d <= k (got k=%s, d=%s)' % (k, d))
    extra_edges = [(u, k) for u in range(d)]
    clique_network = Graph(k + 1, list(itertools.combinations(range(k), 2)) + extra_edges)
    centre = k + 1
    star_edges = [(u, centre) for u in range(k)]
    star_network = Graph(k + 2, star_edges + extra_edges, {edge: k for edge in star_edges})
    return (clique_network, (k, 0)), (star_network, (k, 0))


def verify_star_with_extra_vertex(k, d):
    expected = star_with_extra_vertex_resistance(k, d)
    return all(resistance_matrix(network)[pair] == expected for network, pair in star_with_extra_vertex_networks(k, d))


def is_rayleigh_monotone(g, es):
    """Check that adding the edges es to g leaves no pairwise resistance larger than before."""
    before = resistance_matrix(g)
    after = resistance_matrix(add_edges(g, es))
    return bool(np.all(after <= before))

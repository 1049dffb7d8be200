"""Exhaustive and random generators of small graphs, and the extremal sweeps over labelled trees."""

from collections import namedtuple
from fractions import Fraction
import itertools
from random import Random

import networkx as nx
import numpy as np

from graphs import Graph, OneSumChain, is_connected, make_path
from kemeny import summarize
from util import CapExceededError, parallel_map

_TREE_CAP = 9
_PATH_MAX_CAP = 8
_EXHAUSTIVE_CAP = 6
_DEFAULT_SAMPLES_PER_N = 100
_FLOAT_SLACK = 1e-6

KNOWN_CONNECTED_COUNTS = {1: 1, 2: 1, 3: 4, 4: 38, 5: 728, 6: 26704}
KNOWN_UNLABELLED_CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112}

TreeSweepChunk = namedtuple('TreeSweepChunk', ('trees', 'kemeny_candidates', 'kemeny_max', 'kemeny_max_is_path',
                                               'moment_candidates', 'moment_max'))


def _check_cap(name, n, minimum, cap):
    if n < minimum:
        raise ValueError('%s must be at least %s (got %s)' % (name, minimum, n))
    if n > cap:
        raise CapExceededError('%s=%s is above the cap of %s' % (name, n, cap))


def prufer_decode(sequence):
    """The labelled tree on len(sequence) + 2 vertices with the given Pruefer sequence."""
    return Graph.from_networkx(nx.from_prufer_sequence(list(sequence)))


def prufer_encode(tree):
    return tuple(nx.to_prufer_sequence(tree.to_networkx()))


class TreeIterator(object):
    """Iterates over all n^(n-2) labelled trees on n vertices, in lexicographic order of their Pruefer sequences."""

    def __init__(self, n):
        _check_cap('n', n, 1, _TREE_CAP)
        self.n = n

    def sequences(self):
        if self.n < 3:
            return iter([()])
        return itertools.product(range(self.n), repeat=self.n - 2)

    def __iter__(self):
        if self.n == 1:
            yield Graph(1)
            return
        for sequence in self.sequences():
            yield prufer_decode(sequence)

    def __len__(self):
        return self.n ** (self.n - 2) if self.n >= 2 else 1


def all_trees(n):
    return TreeIterator(n)


def connected_graphs(n):
    """Generate the connected labelled graphs on n vertices, ordered by the bitmask of their edges."""
    pairs = list(itertools.combinations(range(n), 2))
    for bits in range(2 ** len(pairs)):
        g = Graph(n, [pair for i, pair in enumerate(pairs) if bits >> i & 1])
        if is_connected(g):
            yield g


class GraphCorpus(object):
    """Connected graphs on 1..n_max vertices, either every labelled graph or one per isomorphism class.

    Orders up to 6 are enumerated exhaustively. Each larger order contributes samples_per_n graphs from
    random_connected_graph, drawn from random.Random(seed), so a corpus is fully determined by its arguments.

    Isomorphism classes are bucketed by Weisfeiler-Lehman hash and confirmed with networkx.is_isomorphic. The
    representative of a class is its first labelled graph in enumeration order.
    """

    def __init__(self, n_max, up_to_isomorphism=False, samples_per_n=_DEFAULT_SAMPLES_PER_N, seed=0):
        if n_max < 1:
            raise ValueError('n_max must be at least 1 (got %s)' % n_max)
        self.n_max = n_max
        self.up_to_isomorphism = up_to_isomorphism
        rnd = Random(seed)
        graphs = []
        for n in range(1, n_max + 1):
            if n <= _EXHAUSTIVE_CAP:
                generated = connected_graphs(n)
            else:
                generated = [random_connected_graph(rnd, n) for _ in range(samples_per_n)]
            if up_to_isomorphism:
                graphs.extend(_isomorphism_representatives(generated))
            else:
                graphs.extend(generated)
        self.graphs = tuple(graphs)

    def __iter__(self):
        return iter(self.graphs)

    def __len__(self):
        return len(self.graphs)

    def counts_by_n(self):
        counts = {n: 0 for n in range(1, self.n_max + 1)}
        for g in self.graphs:
            counts[g.n] += 1
        return counts


def _isomorphism_representatives(graphs):
    buckets = {}
    representatives = []
    for g in graphs:
        nx_graph = g.to_networkx()
        bucket = buckets.setdefault(nx.weisfeiler_lehman_graph_hash(nx_graph), [])
        if not any(nx.is_isomorphic(nx_graph, other) for other in bucket):
            bucket.append(nx_graph)
            representatives.append(g)
    return representatives


def connected_corpus(n_max, up_to_isomorphism=False, samples_per_n=_DEFAULT_SAMPLES_PER_N, seed=0):
    return GraphCorpus(n_max, up_to_isomorphism, samples_per_n, seed)


def random_tree(rnd, n):
    """Uniform random labelled tree on n vertices, drawn from the random.Random instance rnd."""
    if n < 3:
        return Graph(n, [(0, 1)] if n == 2 else [])
    return prufer_decode([rnd.randrange(n) for _ in range(n - 2)])


def random_connected_graph(rnd, n, extra_edge_prob=0.3):
    """A random spanning tree plus every other pair with probability extra_edge_prob."""
    tree = random_tree(rnd, n)
    extra = [pair for pair in tree.non_edges() if rnd.random() < extra_edge_prob]
    return Graph(n, list(tree.edges) + extra)


def random_chain(rnd, min_parts=3, max_parts=5, max_part_n=5, extra_edge_prob=0.3):
    """Random OneSumChain of min_parts..max_parts connected parts with 1..max_part_n vertices each."""
    parts = []
    for _ in range(rnd.randint(min_parts, max_parts)):
        part = random_connected_graph(rnd, rnd.randint(1, max_part_n), extra_edge_prob)
        parts.append((part, rnd.randrange(part.n), rnd.randrange(part.n)))
    return OneSumChain(parts)


def _float_kemeny_and_moments(n, edges):
    laplacian = np.zeros((n, n))
    for u, v in edges:
        laplacian[u, v] = laplacian[v, u] = -1
        laplacian[u, u] += 1
        laplacian[v, v] += 1
    pinv = np.linalg.pinv(laplacian, hermitian=True)
    diagonal = np.diag(pinv)
    resistances = diagonal[:, None] + diagonal[None, :] - 2 * pinv
    degrees = np.diag(laplacian)
    return degrees.dot(resistances).dot(degrees) / (4 * len(edges)), degrees.dot(resistances)


def _is_path(g):
    return max(g.degrees) <= 2


def _tree_sweep_chunk(job):
    """Sweep the trees whose Pruefer sequences start with first_symbol, re-checking float candidates exactly."""
    n, first_symbol, path_kemeny, path_moment = job
    kemeny_threshold = float(path_kemeny) - _FLOAT_SLACK
    moment_threshold = float(path_moment) - _FLOAT_SLACK
    trees = kemeny_candidates = moment_candidates = 0
    kemeny_max = moment_max = None
    kemeny_max_is_path = True
    for rest in itertools.product(range(n), repeat=n - 3):
        sequence = (first_symbol, ) + rest
        trees += 1
        edges = list(nx.from_prufer_sequence(list(sequence)).edges())
        float_kemeny, float_moments = _float_kemeny_and_moments(n, edges)
        is_kemeny_candidate = float_kemeny >= kemeny_threshold
        is_moment_candidate = float_moments.max() >= moment_threshold
        if not (is_kemeny_candidate or is_moment_candidate):
            continue
        tree = Graph(n, edges)
        summary = summarize(tree)
        if is_kemeny_candidate:
            kemeny_candidates += 1
            if kemeny_max is None or summary.kemeny > kemeny_max:
                kemeny_max = summary.kemeny
                kemeny_max_is_path = _is_path(tree)
            elif summary.kemeny == kemeny_max:
                kemeny_max_is_path = kemeny_max_is_path and _is_path(tree)
        if is_moment_candidate:
            moment_candidates += 1
            tree_max = max(summary.moments)
            if moment_max is None or tree_max > moment_max:
                moment_max = tree_max
    return TreeSweepChunk(trees, kemeny_candidates, kemeny_max, kemeny_max_is_path, moment_candidates, moment_max)


def _merge_maximum(values):
    values = [value for value in values if value is not None]
    return max(values) if values else None


def path_max_report(n, num_workers=1):
    """Sweep every labelled tree on n vertices, comparing Kemeny's constant and moments with those of P_n.

    Trees are screened in floating point and only those within 1e-6 of the path's values are re-checked exactly.
    Work is split into chunks by the first Pruefer symbol.
    """
    _check_cap('n', n, 2, _PATH_MAX_CAP)
    path_summary = summarize(make_path(n))
    path_kemeny, path_moment = path_summary.kemeny, Fraction((n - 1) ** 2)
    if n < 3:
        chunks = [TreeSweepChunk(1, 1, path_kemeny, True, 1, path_moment)]
    else:
        chunks = parallel_map(_tree_sweep_chunk, [(n, first, path_kemeny, path_moment) for first in range(n)],
                              num_workers)
    kemeny_max = _merge_maximum(chunk.kemeny_max for chunk in chunks)
    moment_max = _merge_maximum(chunk.moment_max for chunk in chunks)
    kemeny_max_is_path = all(chunk.kemeny_max_is_path for chunk in chunks if chunk.kemeny_max == kemeny_max)
    return {
        'n': n,
        'trees': sum(chunk.trees for chunk in chunks),
        'kemeny': {
            'path_value': path_kemeny,
            'max_value': kemeny_max,
            'exact_rechecks': sum(chunk.kemeny_candidates for chunk in chunks),
            'maximisers_are_paths': kemeny_max_is_path,
            'holds': kemeny_max == path_kemeny and kemeny_max_is_path,
        },
        'moment': {
            'path_value': path_moment,
            'max_value': moment_max,
            'exact_rechecks': sum(chunk.moment_candidates for chunk in chunks),
            'holds': moment_max == path_moment and path_summary.moments[0] == path_moment,
        },
    }


def path_max_kemeny_report(n, num_workers=1):
    report = path_max_report(n, num_workers)
    return dict(report['kemeny'], n=report['n'], trees=report['trees'])


def path_max_moment_report(n, num_workers=1):
    report = path_max_report(n, num_workers)
    return dict(report['moment'], n=report['n'], trees=report['trees'])


def verify_path_max_kemeny(n, num_workers=1):
    """True iff no tree on n vertices has a larger Kemeny's constant than P_n, and only paths attain it."""
    return path_max_kemeny_report(n, num_workers)['holds']


def verify_path_max_moment(n, num_workers=1):
    """True iff no vertex of a tree on n vertices has a moment above (n - 1)^2, the moment at an end of P_n."""
    return path_max_moment_report(n, num_workers)['holds']

"""Simple undirected graphs, standard families, 1-sums and connectivity.

Vertices are the integers 0..n-1. Graph values are immutable: every operation returns a new graph.
"""

from collections import namedtuple
from fractions import Fraction
import itertools
import numbers

import networkx as nx


class GraphError(ValueError):
    """Raised on an invalid graph construction (self-loop, duplicate edge, bad index or weight)."""


class DisconnectedGraphError(ValueError):
    """Raised when an operation needs a connected graph."""

    def __init__(self, message='graph is disconnected'):
        super(DisconnectedGraphError, self).__init__(message)


def canonical_edge(u, v):
    return (u, v) if u < v else (v, u)


class Graph(object):
    """Simple undirected graph on the vertices 0..n-1, with optional positive edge weights (conductances).

    Arguments:
     * n (int) - number of vertices, at least 1
     * edges (iterable of pairs) - unordered vertex pairs; no self-loops or duplicates
     * weights (dict) - optional mapping from edge to positive weight (anything Fraction accepts, e.g., "3/2").
                        Missing edges have weight 1, and a graph whose weights are all 1 is unweighted
    """

    def __init__(self, n, edges=(), weights=None):
        n = int(n)
        if n < 1:
            raise GraphError('A graph needs at least one vertex (got n=%s)' % n)
        edge_set = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise GraphError('Self-loop at vertex %s' % u)
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError('Edge (%s, %s) has a vertex outside 0..%s' % (u, v, n - 1))
            edge = canonical_edge(u, v)
            if edge in edge_set:
                raise GraphError('Duplicate edge %s' % (edge, ))
            edge_set.add(edge)

        edge_weights = {}
        for (u, v), weight in (weights or {}).items():
            edge = canonical_edge(int(u), int(v))
            if edge not in edge_set:
                raise GraphError('Weight given for non-edge %s' % (edge, ))
            weight = Fraction(weight)
            if weight <= 0:
                raise GraphError('Edge %s has non-positive weight %s' % (edge, weight))
            if weight != 1:
                edge_weights[edge] = weight

        self._n = n
        self._edges = tuple(sorted(edge_set))
        self._weights = edge_weights
        adjacency = [[] for _ in range(n)]
        for u, v in self._edges:
            adjacency[u].append(v)
            adjacency[v].append(u)
        self._adjacency = tuple(tuple(sorted(neighbours)) for neighbours in adjacency)

    @property
    def n(self):
        return self._n

    @property
    def edges(self):
        """Sorted tuple of (u, v) pairs with u < v."""
        return self._edges

    @property
    def m(self):
        return len(self._edges)

    @property
    def degrees(self):
        return tuple(len(neighbours) for neighbours in self._adjacency)

    @property
    def is_weighted(self):
        return bool(self._weights)

    @property
    def weights(self):
        """Mapping from every edge to its weight (1 for unweighted edges)."""
        return {edge: self._weights.get(edge, Fraction(1)) for edge in self._edges}

    def degree(self, v):
        return len(self._adjacency[v])

    def neighbours(self, v):
        return self._adjacency[v]

    def weight(self, u, v):
        return self._weights.get(canonical_edge(u, v), Fraction(1))

    def has_edge(self, u, v):
        return u != v and v in self._adjacency[u]

    def non_edges(self):
        """Sorted list of the vertex pairs (u, v), u < v, that aren't edges."""
        return [(u, v) for u, v in itertools.combinations(range(self._n), 2) if not self.has_edge(u, v)]

    def check_vertex(self, v):
        if not isinstance(v, numbers.Integral) or not 0 <= v < self._n:
            raise GraphError('Vertex %r is not in 0..%s' % (v, self._n - 1))
        return v

    def to_networkx(self):
        nx_graph = nx.Graph()
        nx_graph.add_nodes_from(range(self._n))
        for u, v in self._edges:
            nx_graph.add_edge(u, v, weight=self.weight(u, v))
        return nx_graph

    @classmethod
    def from_networkx(cls, nx_graph):
        """Convert a networkx graph, relabelling its nodes to 0..n-1 in sorted order."""
        index = {node: i for i, node in enumerate(sorted(nx_graph.nodes()))}
        edges = [(index[u], index[v]) for u, v in nx_graph.edges()]
        weights = {(index[u], index[v]): data['weight'] for u, v, data in nx_graph.edges(data=True)
                   if 'weight' in data}
        return cls(len(index), edges, weights)

    def __eq__(self, other):
        return (isinstance(other, Graph) and self._n == other._n and self._edges == other._edges and
                self._weights == other._weights)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self._n, self._edges, tuple(sorted(self._weights.items()))))

    def __repr__(self):
        if self._weights:
            return 'Graph(%d, %r, weights=%r)' % (self._n, list(self._edges), self._weights)
        return 'Graph(%d, %r)' % (self._n, list(self._edges))


ChainPart = namedtuple('ChainPart', ('graph', 'attach_left', 'attach_right'))


class OneSumChain(object):
    """An ordered list of parts describing G_1 (+) G_2 (+) ... (+) G_n, where (+) is the 1-sum.

    Each part is a (graph, attach_left, attach_right) triple. The attach_right vertex of part i is identified with
    the attach_left vertex of part i + 1. The attach_left vertex of the first part and the attach_right vertex of the
    last part mark the chain ends and are ignored (they may be None).
    """

    def __init__(self, parts):
        parts = tuple(ChainPart(*part) for part in parts)
        if not parts:
            raise GraphError('A chain needs at least one part')
        for i, part in enumerate(parts):
            if not isinstance(part.graph, Graph):
                raise GraphError('Part %s is not a Graph' % i)
            if not is_connected(part.graph):
                raise DisconnectedGraphError('graph is disconnected (chain part %s)' % i)
            if i > 0:
                part.graph.check_vertex(part.attach_left)
            if i < len(parts) - 1:
                part.graph.check_vertex(part.attach_right)
        self._parts = parts

    @classmethod
    def from_shared_vertex(cls, parts):
        """Create the chain of (graph, vertex) parts that are all 1-summed at the same vertex."""
        return cls([(graph, vertex, vertex) for graph, vertex in parts])

    @property
    def parts(self):
        return self._parts

    def __len__(self):
        return len(self._parts)

    def __iter__(self):
        return iter(self._parts)

    def __repr__(self):
        return 'OneSumChain(%r)' % (list(self._parts), )


def is_connected(g):
    return nx.is_connected(g.to_networkx())


def cut_vertices(g):
    """Return the articulation points (1-separators) of g as a frozenset."""
    return frozenset(nx.articulation_points(g.to_networkx()))


def _check_connected(*graphs):
    for g in graphs:
        if not is_connected(g):
            raise DisconnectedGraphError()


def one_sum(g1, v1, g2, v2):
    """Return the 1-sum of g1 and g2 with v1 identified with v2, and the relabelling of g1's vertices.

    The vertices of g2 keep their labels, the merged vertex is v2, and the remaining vertices of g1 follow in ascending
    order of their original labels. The second return value maps each g1 vertex to its label in the sum.
    """
    _check_connected(g1, g2)
    g1.check_vertex(v1)
    g2.check_vertex(v2)
    g1_map = []
    next_label = g2.n
    for u in range(g1.n):
        if u == v1:
            g1_map.append(v2)
        else:
            g1_map.append(next_label)
            next_label += 1

    edges = list(g2.edges)
    weights = dict(g2.weights) if g2.is_weighted else {}
    for u, v in g1.edges:
        edge = canonical_edge(g1_map[u], g1_map[v])
        edges.append(edge)
        if g1.is_weighted:
            weights[edge] = g1.weight(u, v)
    return Graph(g1.n + g2.n - 1, edges, weights), tuple(g1_map)


def chain_sum(chain):
    """Left-fold one_sum over the chain's parts.

    Returns the summed graph and, for every part, a tuple mapping the part's vertices to their labels in the sum.
    """
    parts = chain.parts
    current = parts[0].graph
    part_maps = [tuple(range(current.n))]
    for previous, part in zip(parts, parts[1:]):
        joint = part_maps[-1][previous.attach_right]
        current, current_map = one_sum(current, joint, part.graph, part.attach_left)
        part_maps = [tuple(current_map[u] for u in part_map) for part_map in part_maps]
        part_maps.append(tuple(range(part.graph.n)))
    return current, tuple(part_maps)


def _check_size(name, value, minimum):
    if int(value) < minimum:
        raise GraphError('%s must be at least %s (got %s)' % (name, minimum, value))


def make_complete(n):
    _check_size('n', n, 1)
    return Graph.from_networkx(nx.complete_graph(n))


def make_path(n):
    """Path 0-1-...-(n-1)."""
    _check_size('n', n, 1)
    return Graph.from_networkx(nx.path_graph(n))


def make_star(n):
    """Star on n vertices with centre 0."""
    _check_size('n', n, 1)
    return Graph.from_networkx(nx.star_graph(n - 1))


def make_cycle(n):
    _check_size('n', n, 3)
    return Graph.from_networkx(nx.cycle_graph(n))


def make_friendship(k):
    """k triangles sharing vertex 0."""
    _check_size('k', k, 1)
    edges = []
    for i in range(k):
        u, v = 2 * i + 1, 2 * i + 2
        edges.extend([(0, u), (0, v), (u, v)])
    return Graph(2 * k + 1, edges)


def make_barbell(k, a, b, c):
    """Return the barbell B(k, a, b, c) on k * a + b + c vertices.

    The graph is k copies of the path P_a. The k left path ends and a clique K_b form a clique, and so do the k right
    path ends and a clique K_c. Labels: K_b is 0..b-1, copy p of the path is b + p * a .. b + p * a + a - 1 (left to
    right), and K_c is the last c vertices. For k = 1 this is K_{b+1} (+) P_a (+) K_{c+1}.
    """
    for name, value, minimum in [('k', k, 1), ('a', a, 2), ('b', b, 1), ('c', c, 1)]:
        _check_size(name, value, minimum)
    left_ends = [b + p * a for p in range(k)]
    right_ends = [b + p * a + a - 1 for p in range(k)]
    left_clique = list(range(b)) + left_ends
    right_clique = right_ends + list(range(b + k * a, b + k * a + c))
    edges = set(itertools.combinations(left_clique, 2)) | set(itertools.combinations(right_clique, 2))
    for start in left_ends:
        edges.update((start + t, start + t + 1) for t in range(a - 1))
    return Graph(k * a + b + c, edges)


def make_kn_path(n):
    """Return K_n (+) P_n, with K_n glued to one end of the path, and the path's other (degree 1) end."""
    _check_size('n', n, 2)
    graph, _ = one_sum(make_complete(n), 0, make_path(n), 0)
    return graph, n - 1


def add_edges(g, es):
    """Return g with the non-edges in es added."""
    es = [canonical_edge(int(u), int(v)) for u, v in es]
    for u, v in es:
        if u == v:
            raise GraphError('Self-loop at vertex %s' % u)
        g.check_vertex(u)
        g.check_vertex(v)
        if g.has_edge(u, v):
            raise GraphError('(%s, %s) is already an edge' % (u, v))
    if len(set(es)) != len(es):
        raise GraphError('Edge set %s has duplicates' % (es, ))
    weights = g.weights if g.is_weighted else None
    return Graph(g.n, list(g.edges) + es, weights)


def remove_edges(g, es):
    """Return g without the edges in es."""
    to_remove = set(canonical_edge(int(u), int(v)) for u, v in es)
    existing = set(g.edges)
    missing = [edge for edge in to_remove if edge not in existing]
    if missing:
        raise GraphError('Not edges: %s' % sorted(missing))
    weights = {edge: weight for edge, weight in g.weights.items() if edge not in to_remove}
    return Graph(g.n, [edge for edge in g.edges if edge not in to_remove], weights)


def attach_pendants(g, v, k):
    """Return g with k pendant vertices attached at v, i.e., g (+)_v S_{k+1} at the star's centre.

    The vertices of g keep their labels and the pendants are g.n .. g.n + k - 1.
    """
    _check_size('k', k, 1)
    graph, _ = one_sum(make_star(k + 1), 0, g, v)
    return graph

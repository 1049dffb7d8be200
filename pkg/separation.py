"""Kemeny's constant and moments of 1-sums from the summaries of their parts.

Each formula has a *_direct counterpart that assembles the composite graph and computes the same value from its own
resistance matrix. The formula side never looks at the composite: resistances between attachment vertices of
different parts are sums of within-part resistances, since resistances add across cut vertices.
"""

from collections import namedtuple

import networkx as nx

from graphs import Graph, OneSumChain, chain_sum, cut_vertices, one_sum
from kemeny import KemenyInputError, kemeny, moment, summarize

SeparationTerms = namedtuple('SeparationTerms', ('edge_counts', 'kemenys', 'moments', 'cross_resistances'))
Separation = namedtuple('Separation', ('g1', 'v1', 'g2', 'v2', 'g1_vertices', 'g2_vertices'))


def _check_edge_total(total):
    if total == 0:
        raise KemenyInputError('Kemeny\'s constant needs at least one edge (all parts are single vertices)')


def kemeny_one_sep(g1, v1, g2, v2):
    """Kemeny's constant of the 1-sum of g1 and g2 at v1 = v2.

    K = [m1 (K(G1) + mu(G2, v2)) + m2 (K(G2) + mu(G1, v1))] / (m1 + m2). A single-vertex part has no edges and
    contributes nothing.
    """
    g1.check_vertex(v1)
    g2.check_vertex(v2)
    summary1, summary2 = summarize(g1), summarize(g2)
    _check_edge_total(summary1.m + summary2.m)
    return ((summary1.m * (summary1.kemeny + summary2.moments[v2]) +
             summary2.m * (summary2.kemeny + summary1.moments[v1])) / (summary1.m + summary2.m))


def kemeny_one_sep_direct(g1, v1, g2, v2):
    return kemeny(one_sum(g1, v1, g2, v2)[0])


def _attachment(chain, i, j):
    """The attachment vertex of part j on the side facing part i."""
    part = chain.parts[j]
    return part.attach_left if j > i else part.attach_right


def _through_resistance(chain, summaries, p):
    """Resistance inside part p between its two attachment vertices."""
    part = chain.parts[p]
    return summaries[p].resistances[part.attach_left][part.attach_right]


def separation_terms(chain):
    """Return the per-part data that the chain formula combines.

    moments[(i, j)] is mu(G_j, v) at the attachment vertex of part j facing part i, for every j != i.
    cross_resistances[(i, j)], for j - i >= 2, is the resistance between the right attachment of part i and the left
    attachment of part j.
    """
    summaries = [summarize(part.graph) for part in chain.parts]
    n = len(summaries)
    moments = {(i, j): summaries[j].moments[_attachment(chain, i, j)]
               for i in range(n) for j in range(n) if i != j}
    through = [_through_resistance(chain, summaries, p) if 0 < p < n - 1 else None for p in range(n)]
    cross_resistances = {}
    for i in range(n):
        for j in range(i + 2, n):
            cross_resistances[(i, j)] = sum(through[i + 1:j])
    return SeparationTerms(edge_counts=tuple(summary.m for summary in summaries),
                           kemenys=tuple(summary.kemeny for summary in summaries), moments=moments,
                           cross_resistances=cross_resistances)


def kemeny_chain(chain):
    """Kemeny's constant of the chain G_1 (+) G_2 (+) ... (+) G_n from its separation terms."""
    terms = separation_terms(chain)
    edge_counts = terms.edge_counts
    total = sum(edge_counts)
    _check_edge_total(total)
    n = len(edge_counts)
    numerator = sum(edge_counts[i] * (terms.kemenys[i] + sum(terms.moments[(i, j)] for j in range(n) if j != i))
                    for i in range(n))
    numerator += 2 * sum(edge_counts[i] * edge_counts[j] * resistance
                         for (i, j), resistance in terms.cross_resistances.items())
    return numerator / total


def kemeny_chain_direct(chain):
    return kemeny(chain_sum(chain)[0])


def moment_chain(chain, v0):
    """mu(G, v0) for a vertex v0 of the first part, from the parts' moments and attachment resistances."""
    parts = chain.parts
    parts[0].graph.check_vertex(v0)
    summaries = [summarize(part.graph) for part in parts]
    lefts = [v0] + [part.attach_left for part in parts[1:]]
    value = sum(summary.moments[left] for summary, left in zip(summaries, lefts))
    for p in range(1, len(parts)):
        step = summaries[p - 1].resistances[lefts[p - 1]][parts[p - 1].attach_right]
        value += 2 * step * sum(summary.m for summary in summaries[p:])
    return value


def moment_chain_direct(chain, v0):
    graph, part_maps = chain_sum(chain)
    return moment(graph, part_maps[0][v0]).value


def kemeny_star_of_parts(parts):
    """Kemeny's constant of (graph, vertex) parts all 1-summed at the same vertex.

    K = sum_i m_i (K(G_i) + sum_{j != i} mu(G_j, v_j)) / sum_i m_i
    """
    parts = [(graph, graph.check_vertex(vertex)) for graph, vertex in parts]
    if not parts:
        raise ValueError('Need at least one part')
    summaries = [summarize(graph) for graph, _ in parts]
    moments = [summary.moments[vertex] for summary, (_, vertex) in zip(summaries, parts)]
    total = sum(summary.m for summary in summaries)
    _check_edge_total(total)
    moment_sum = sum(moments)
    return sum(summary.m * (summary.kemeny + moment_sum - own_moment)
               for summary, own_moment in zip(summaries, moments)) / total


def kemeny_star_of_parts_direct(parts):
    return kemeny_chain_direct(OneSumChain.from_shared_vertex(parts))


def split_at_cut_vertex(g, v):
    """Split g at the cut vertex v into two connected parts that share v.

    The first part holds v and the component of g - v containing the smallest vertex; the second holds v and every
    other component. Each part's vertices are relabelled in ascending order of their labels in g, and g1_vertices /
    g2_vertices map the part labels back to g.
    """
    g.check_vertex(v)
    if v not in cut_vertices(g):
        raise ValueError('Vertex %s is not a cut vertex of %r' % (v, g))
    nx_graph = g.to_networkx()
    nx_graph.remove_node(v)
    components = sorted((sorted(component) for component in nx.connected_components(nx_graph)), key=min)
    first = sorted(components[0] + [v])
    second = sorted([u for component in components[1:] for u in component] + [v])

    def induced(vertices):
        index = {u: i for i, u in enumerate(vertices)}
        edges = [(index[a], index[b]) for a, b in g.edges if a in index and b in index]
        return Graph(len(vertices), edges), index[v]

    g1, v1 = induced(first)
    g2, v2 = induced(second)
    return Separation(g1=g1, v1=v1, g2=g2, v2=v2, g1_vertices=tuple(first), g2_vertices=tuple(second))


def kemeny_at_cut_vertex(g, v):
    """Kemeny's constant of g from the two-part formula applied at its cut vertex v."""
    separation = split_at_cut_vertex(g, v)
    return kemeny_one_sep(separation.g1, separation.v1, separation.g2, separation.v2)

from fractions import Fraction
from random import Random

import pytest

from enumeration import random_chain
from graphs import Graph, OneSumChain, make_complete, make_cycle, make_path, make_star
from kemeny import KemenyInputError, kemeny
from separation import kemeny_at_cut_vertex, kemeny_chain, kemeny_chain_direct, kemeny_one_sep, \
    kemeny_one_sep_direct, kemeny_star_of_parts, kemeny_star_of_parts_direct, moment_chain, moment_chain_direct, \
    separation_terms, split_at_cut_vertex

EDGE = make_path(2)


def test_two_triangles_make_a_bowtie():
    assert kemeny_one_sep(make_complete(3), 0, make_complete(3), 0) == 4


@pytest.mark.parametrize('g1, v1, g2, v2', [
    (make_complete(3), 1, make_path(3), 0),
    (make_cycle(4), 0, make_star(4), 2),
    (make_path(4), 1, make_complete(4), 3),
    (Graph(1), 0, make_cycle(5), 2),
])
def test_one_separation_matches_direct(g1, v1, g2, v2):
    value = kemeny_one_sep(g1, v1, g2, v2)
    assert value == kemeny_one_sep_direct(g1, v1, g2, v2)
    assert value == kemeny_one_sep(g2, v2, g1, v1)


def test_one_separation_needs_an_edge():
    with pytest.raises(KemenyInputError):
        kemeny_one_sep(Graph(1), 0, Graph(1), 0)


def test_chain_of_edges_is_a_path():
    chain = OneSumChain([(EDGE, None, 1), (EDGE, 0, 1), (EDGE, 0, None)])
    assert kemeny_chain(chain) == Fraction(19, 6)
    assert moment_chain(chain, 0) == 9
    assert moment_chain(chain, 1) == 5


def test_separation_terms_cross_resistances():
    chain = OneSumChain([(EDGE, None, 1), (make_path(3), 0, 2), (make_complete(3), 0, 1), (EDGE, 0, None)])
    terms = separation_terms(chain)
    assert terms.edge_counts == (1, 2, 3, 1)
    assert terms.cross_resistances[(0, 2)] == 2
    assert terms.cross_resistances[(0, 3)] == 2 + Fraction(2, 3)
    assert terms.cross_resistances[(1, 3)] == Fraction(2, 3)
    # Parts to the right of part 0 are seen from their left attachment
    assert terms.moments[(0, 1)] == 4
    assert terms.moments[(3, 1)] == 4
    assert kemeny_chain(chain) == kemeny_chain_direct(chain)


def test_random_chains_match_direct():
    rnd = Random(1)
    for _ in range(10):
        chain = random_chain(rnd)
        if sum(part.graph.m for part in chain) == 0:
            continue
        assert kemeny_chain(chain) == kemeny_chain_direct(chain)
        assert moment_chain(chain, 0) == moment_chain_direct(chain, 0)


def test_star_of_parts():
    assert kemeny_star_of_parts([(EDGE, 0)] * 3) == Fraction(5, 2)
    parts = [(make_complete(3), 0), (make_path(3), 1), (make_cycle(4), 2)]
    value = kemeny_star_of_parts(parts)
    assert value == kemeny_star_of_parts_direct(parts)
    assert value == kemeny_chain(OneSumChain.from_shared_vertex(parts))


def test_split_at_cut_vertex():
    separation = split_at_cut_vertex(make_path(3), 1)
    assert separation.g1 == EDGE and separation.v1 == 1
    assert separation.g2 == EDGE and separation.v2 == 0
    assert separation.g1_vertices == (0, 1)
    assert separation.g2_vertices == (1, 2)
    with pytest.raises(ValueError):
        split_at_cut_vertex(make_cycle(4), 0)


def test_kemeny_at_cut_vertex():
    g = make_star(5)
    assert kemeny_at_cut_vertex(g, 0) == kemeny(g)

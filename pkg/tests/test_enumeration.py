from random import Random

import pytest

from enumeration import KNOWN_CONNECTED_COUNTS, KNOWN_UNLABELLED_CONNECTED_COUNTS, all_trees, connected_corpus, \
    connected_graphs, path_max_kemeny_report, path_max_report, prufer_decode, prufer_encode, random_chain, \
    random_connected_graph, random_tree, verify_path_max_kemeny, verify_path_max_moment
from graphs import is_connected, make_path
from util import CapExceededError


@pytest.mark.parametrize('n, count', [(1, 1), (2, 1), (3, 3), (4, 16), (5, 125)])
def test_tree_counts(n, count):
    trees = list(all_trees(n))
    assert len(trees) == len(all_trees(n)) == count
    assert len(set(trees)) == count
    assert all(tree.m == n - 1 and is_connected(tree) for tree in trees)


def test_prufer_round_trip():
    for tree in all_trees(5):
        assert prufer_decode(prufer_encode(tree)) == tree
    assert prufer_decode([1, 2]) == make_path(4)


def test_tree_cap():
    with pytest.raises(CapExceededError):
        all_trees(10)
    with pytest.raises(ValueError):
        all_trees(0)


@pytest.mark.parametrize('n', [1, 2, 3, 4])
def test_connected_graph_counts(n):
    assert len(list(connected_graphs(n))) == KNOWN_CONNECTED_COUNTS[n]


def test_corpus_counts():
    assert connected_corpus(4).counts_by_n() == {1: 1, 2: 1, 3: 4, 4: 38}
    assert connected_corpus(5, up_to_isomorphism=True).counts_by_n() == {
        n: KNOWN_UNLABELLED_CONNECTED_COUNTS[n] for n in range(1, 6)}


def test_corpus_samples_beyond_exhaustive_orders():
    corpus = connected_corpus(7, samples_per_n=4, seed=11)
    assert corpus.counts_by_n() == dict(KNOWN_CONNECTED_COUNTS, **{7: 4})
    sampled = [g for g in corpus if g.n == 7]
    assert all(is_connected(g) for g in sampled)
    assert sampled == [g for g in connected_corpus(7, samples_per_n=4, seed=11) if g.n == 7]
    with pytest.raises(ValueError):
        connected_corpus(0)


def test_random_generators_are_seeded():
    assert random_tree(Random(3), 8) == random_tree(Random(3), 8)
    g = random_connected_graph(Random(4), 7)
    assert is_connected(g) and g.n == 7
    chain = random_chain(Random(5))
    assert 3 <= len(chain) <= 5


@pytest.mark.parametrize('n', [2, 3, 4, 5, 6])
def test_path_maximises_kemeny_and_moment(n):
    assert verify_path_max_kemeny(n)
    assert verify_path_max_moment(n)


def test_path_max_report():
    report = path_max_report(5, num_workers=2)
    assert report['trees'] == 125
    assert report['kemeny']['path_value'] == report['kemeny']['max_value']
    assert report['kemeny']['maximisers_are_paths']
    assert report['moment']['max_value'] == 16
    assert 1 <= report['kemeny']['exact_rechecks'] < 125
    assert path_max_kemeny_report(4)['trees'] == 16

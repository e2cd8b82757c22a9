from fedledger.utils import statistics

import numpy as np


def test_rank_descending():
    ranked = statistics.rank_descending([1., 3., 2.], [10, 11, 12])

    assert ranked == [11, 12, 10]


def test_rank_descending_ties_by_ascending_id():
    ranked = statistics.rank_descending([2., 5., 2., 5.], [7, 3, 1, 9])

    assert ranked == [3, 9, 1, 7]
    assert all(isinstance(i, int) for i in ranked)


def test_rank_descending_empty():
    assert statistics.rank_descending([], []) == []


def test_relative_gap():
    assert statistics.relative_gap(110., 100.) == 0.1
    assert statistics.relative_gap(-90., -100.) == 0.1
    assert statistics.relative_gap(0., 0.) == 0.
    assert statistics.relative_gap(1., 0.) == np.inf


def test_count_ordered():
    assert statistics.count_ordered([(1, 2, 3), (1, 1, 2), (2, 1, 3)]) == 2

import numpy as np


def rank_descending(values, ids):
    """ Order ids by non-increasing value, ties broken by ascending id """
    values = np.asarray(values, dtype=float)
    ids = np.asarray(ids)
    if values.size == 0:
        return []
    # lexsort uses the last key as primary
    order = np.lexsort((ids, -values))
    return [ids[i].item() for i in order]


def relative_gap(value, reference):
    """ Relative gap of value over reference, (value - reference) / |reference| """
    if reference == 0:
        return np.inf if value > 0 else (0. if value == 0 else -np.inf)
    return (value - reference) / abs(reference)


def count_ordered(sequences):
    """ Number of sequences that are non-decreasing """
    return sum(1 for seq in sequences if all(a <= b for a, b in zip(seq, seq[1:])))

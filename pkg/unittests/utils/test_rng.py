from fedledger.utils import rng

import numpy as np


def test_stream_reproducible():
    a = rng.stream(42, rng.TRAINING, 3, 7).standard_normal(5)
    b = rng.stream(42, rng.TRAINING, 3, 7).standard_normal(5)

    assert np.array_equal(a, b)


def test_streams_independent_of_call_order():
    first = rng.stream(1, rng.MINING, 1, 0).integers(0, 2 ** 32)
    rng.stream(1, rng.MINING, 2, 0).integers(0, 2 ** 32)
    again = rng.stream(1, rng.MINING, 1, 0).integers(0, 2 ** 32)

    assert first == again


def test_streams_differ_by_key_and_purpose():
    base = rng.stream(5, rng.TRAINING, 0, 1).standard_normal(4)

    assert not np.array_equal(base, rng.stream(5, rng.TRAINING, 1, 0).standard_normal(4))
    assert not np.array_equal(base, rng.stream(5, rng.MINING, 0, 1).standard_normal(4))
    assert not np.array_equal(base, rng.stream(6, rng.TRAINING, 0, 1).standard_normal(4))

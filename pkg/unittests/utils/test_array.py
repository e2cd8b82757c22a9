from fedledger.utils import array

import numpy as np


def test_shapes_size():
    assert array.shapes_size([(3, 4), (4,), (1,)]) == 17


def test_unpack_views():
    flat = np.arange(17, dtype=np.float64)

    kernel, bias, out = array.unpack(flat, [(3, 4), (4,), (1,)])

    assert kernel.shape == (3, 4)
    assert np.array_equal(kernel[1], [4, 5, 6, 7])
    assert np.array_equal(bias, [12, 13, 14, 15])
    assert out[0] == 16


def test_pack_inverse_of_unpack():
    flat = np.linspace(-1, 1, 17)

    assert np.array_equal(array.pack(array.unpack(flat, [(3, 4), (4,), (1,)])), flat)


def test_pack_batch():
    grads = array.pack_batch([np.ones((2, 3, 2)), np.zeros((2, 3)), np.full((2, 1), 5.)], 2)

    assert grads.shape == (2, 10)
    assert np.array_equal(grads[0], [1] * 6 + [0] * 3 + [5])

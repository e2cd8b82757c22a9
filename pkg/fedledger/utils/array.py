import numpy as np


def shapes_size(shapes):
    """ Total number of coefficients in a list of array shapes """
    return int(sum(np.prod(shape, dtype=int) for shape in shapes))


def unpack(flat, shapes):
    """ Split a flat vector into views of the given shapes (row major) """
    flat = np.asarray(flat)
    assert flat.ndim == 1 and flat.size == shapes_size(shapes), \
        'Vector of length %d does not fit shapes %s' % (flat.size, shapes)

    arrays = []
    offset = 0
    for shape in shapes:
        size = int(np.prod(shape, dtype=int))
        arrays.append(flat[offset:offset + size].reshape(shape))
        offset += size
    return arrays


def pack(arrays):
    """ Concatenate arrays into one flat float64 vector (row major) """
    return np.concatenate([np.asarray(a, dtype=np.float64).ravel() for a in arrays])


def pack_batch(arrays, batch_size):
    """ Concatenate per-sample arrays (first axis is the sample) into a (batch, |w|) matrix """
    return np.concatenate([np.asarray(a, dtype=np.float64).reshape(batch_size, -1) for a in arrays], axis=1)

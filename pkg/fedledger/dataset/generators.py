from .DataSet import DataSet

import numpy as np

UNDEFINED = 'undefined'
TWO_GAUSSIANS = 'two_gaussians'

available_generators = {TWO_GAUSSIANS: 'Two isotropic Gaussian clusters, one per class'}


class AbstractGenerator:
    """ Abstract synthetic data generator """

    # @abstract
    def __init__(self, id_, feature_dim):
        self.id = id_
        self.feature_dim = feature_dim

    # @abstract
    def sample(self, length, rng: np.random.Generator):
        """ Draw a data set of length samples """
        return DataSet(np.zeros((length, self.feature_dim)), np.zeros(length))

    def label(self):
        if self.id is not UNDEFINED:
            return available_generators[self.id]
        return ''


class TwoGaussiansGenerator(AbstractGenerator):
    """ Balanced binary classes drawn from unit-variance isotropic Gaussians
        Class means are offset +/- separation / 2 along a fixed unit axis, both shifted by
        class_offset along that same axis.
    """

    def __init__(self, feature_dim, separation=2., class_offset=0., axis=None):
        AbstractGenerator.__init__(self, TWO_GAUSSIANS, feature_dim)
        self.separation = separation
        self.class_offset = class_offset
        if axis is None:
            axis = np.zeros(feature_dim)
            axis[0] = 1.
        self.axis = np.asarray(axis, dtype=np.float64) / np.linalg.norm(axis)

    def sample(self, length, rng):
        y = (np.arange(length) % 2).astype(np.float64)
        rng.shuffle(y)
        centers = (self.class_offset + (y - .5) * self.separation)[:, None] * self.axis[None, :]
        x = centers + rng.standard_normal((length, self.feature_dim))
        return DataSet(x, y)


builders = {
    TWO_GAUSSIANS: TwoGaussiansGenerator
}


def get_generators(generator_id):
    """ Factory for the generators """

    if generator_id in builders.keys():
        return builders[generator_id]

    return None

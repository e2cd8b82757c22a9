from .. import DimensionMismatch
from ...utils.array import shapes_size

import numpy as np

# Flat float64 vector of model parameters, the unit of upload, download and aggregation
WeightVector = np.ndarray


def sigmoid(z):
    return .5 * (1. + np.tanh(.5 * z))


class AbstractModel:
    """ Binary classifier with a flat weight vector and per-sample cross-entropy loss """

    architecture = 'unknown'

    def __init__(self, input_dim: int, weights=None):
        self.input_dim = input_dim
        if weights is None:
            self.weights = np.zeros(self.num_weights)
        else:
            self.weights = np.array(weights, dtype=np.float64)
            assert self.weights.shape == (self.num_weights,), \
                'Expecting %d weights, got shape %s' % (self.num_weights, self.weights.shape)

    @property
    def num_weights(self):
        return shapes_size(self.param_shapes())

    # @abstract
    def param_shapes(self):
        """ Shapes of the parameter arrays, in packing order """
        return []

    # @abstract
    def logits(self, x):
        """ Pre-sigmoid output for a batch of samples """
        return np.zeros(len(x))

    # @abstract
    def per_sample_gradients(self, x, y):
        """ Gradient of each sample loss, shape (batch, |w|) """
        return np.zeros((len(x), self.num_weights))

    def with_weights(self, weights):
        """ Same architecture with other weights """
        return type(self)(self.input_dim, weights)

    def initial_weights(self, rng: np.random.Generator):
        """ Weights of the shared initial model """
        return np.zeros(self.num_weights)

    def predict_proba(self, x):
        return sigmoid(self.logits(self._check_input(x)))

    def sample_losses(self, x, y):
        """ Binary cross-entropy of each sample, computed from the logits """
        z = self.logits(self._check_input(x))
        return np.logaddexp(0., z) - np.asarray(y, dtype=np.float64) * z

    def loss(self, x, y):
        """ Data set average loss """
        return float(np.mean(self.sample_losses(x, y)))

    def accuracy(self, x, y):
        return float(np.mean((self.predict_proba(x) >= .5) == (np.asarray(y) >= .5)))

    def per_sample_gradient(self, x, y):
        """ Gradient of the loss of a single sample """
        x = self._check_input(np.atleast_2d(x))
        return self.per_sample_gradients(x, np.atleast_1d(y))[0]

    def _check_input(self, x):
        x = np.asarray(x, dtype=np.float64)
        if x.ndim != 2 or x.shape[1] != self.input_dim:
            raise DimensionMismatch('Model expects %d input features, got shape %s' % (self.input_dim, x.shape))
        return x

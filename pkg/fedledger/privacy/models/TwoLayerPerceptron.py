from .AbstractModel import AbstractModel, sigmoid
from ...utils.array import unpack, pack, pack_batch

import numpy as np


class TwoLayerPerceptron(AbstractModel):
    """ One tanh hidden layer and a sigmoid output unit
        Weights: hidden kernel (width x input), hidden bias, output kernel, output bias
    """

    architecture = 'two_layer_mlp'

    def __init__(self, input_dim: int, weights=None, hidden_width: int = 16):
        self.hidden_width = hidden_width
        AbstractModel.__init__(self, input_dim, weights)

    # @override
    def param_shapes(self):
        return [(self.hidden_width, self.input_dim), (self.hidden_width,), (self.hidden_width,), (1,)]

    # @override
    def with_weights(self, weights):
        return TwoLayerPerceptron(self.input_dim, weights, self.hidden_width)

    # @override
    def initial_weights(self, rng):
        # Random hidden layer to break the symmetry between units
        kernel = rng.standard_normal((self.hidden_width, self.input_dim)) / np.sqrt(self.input_dim)
        out_kernel = rng.standard_normal(self.hidden_width) / np.sqrt(self.hidden_width)
        return pack([kernel, np.zeros(self.hidden_width), out_kernel, np.zeros(1)])

    # @override
    def logits(self, x):
        hidden = self._hidden(x)
        _, _, out_kernel, out_bias = unpack(self.weights, self.param_shapes())
        return hidden @ out_kernel + out_bias[0]

    # @override
    def per_sample_gradients(self, x, y):
        x = self._check_input(x)
        _, _, out_kernel, out_bias = unpack(self.weights, self.param_shapes())

        hidden = self._hidden(x)
        residual = sigmoid(hidden @ out_kernel + out_bias[0]) - np.asarray(y, dtype=np.float64)

        # Back-propagation through tanh
        delta_hidden = residual[:, None] * out_kernel[None, :] * (1. - hidden ** 2)
        grad_kernel = np.einsum('bh,bi->bhi', delta_hidden, x)

        return pack_batch([grad_kernel, delta_hidden, residual[:, None] * hidden, residual[:, None]], len(x))

    def _hidden(self, x):
        kernel, bias, _, _ = unpack(self.weights, self.param_shapes())
        return np.tanh(x @ kernel.T + bias)

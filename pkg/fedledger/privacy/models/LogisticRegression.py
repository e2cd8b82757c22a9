from .AbstractModel import AbstractModel, sigmoid
from ...utils.array import unpack

import numpy as np


class LogisticRegression(AbstractModel):
    """ Logistic regression, weights are the feature coefficients followed by the bias """

    architecture = 'logistic_regression'

    # @override
    def param_shapes(self):
        return [(self.input_dim,), (1,)]

    # @override
    def logits(self, x):
        coef, bias = unpack(self.weights, self.param_shapes())
        return x @ coef + bias[0]

    # @override
    def per_sample_gradients(self, x, y):
        x = self._check_input(x)
        residual = sigmoid(self.logits(x)) - np.asarray(y, dtype=np.float64)
        return np.hstack([residual[:, None] * x, residual[:, None]])

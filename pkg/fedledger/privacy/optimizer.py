#
# Differentially private local training: clipped per-sample gradients, Gaussian noise, SGD updates
#

from . import EmptyBatch
from .PrivacyParams import PrivacyParams
from .models.AbstractModel import AbstractModel

import numpy as np
import logging

_logger = logging.getLogger(__name__)


def clip_gradient(g, clip_bound):
    """ Scale g down to L2 norm clip_bound when larger, g / max(1, |g| / A) """
    g = np.asarray(g, dtype=np.float64)
    return g / max(1., np.linalg.norm(g) / clip_bound)


def clip_gradients(grads, clip_bound):
    """ Row-wise clip_gradient of a (batch, |w|) matrix """
    norms = np.linalg.norm(grads, axis=1)
    return grads / np.maximum(1., norms / clip_bound)[:, None]


def privatize(clipped_sum, priv: PrivacyParams, rng: np.random.Generator):
    """ Noisy average gradient G'' = (sum of clipped gradients + N(0, sigma^2 A^2 I)) / B

        Standard normal draws are consumed whatever sigma is, so runs differing only by
        their noise scale share the same random stream.
    """
    z = rng.standard_normal(np.shape(clipped_sum))
    return (clipped_sum + priv.noise_std * z) / priv.batch_size


def noisy_gradient(model: AbstractModel, x, y, priv: PrivacyParams, rng: np.random.Generator):
    """ G'' of one batch """
    if len(x) == 0:
        raise EmptyBatch('Empty training batch')
    clipped = clip_gradients(model.per_sample_gradients(x, y), priv.clip_bound)
    return privatize(clipped.sum(axis=0), priv, rng)


def noisy_batch_step(model: AbstractModel, x, y, priv: PrivacyParams, rng: np.random.Generator,
                     learning_rate=None) -> AbstractModel:
    """ One SGD step w - alpha G'' on the batch (x, y) """
    alpha = priv.learning_rate if learning_rate is None else learning_rate
    return model.with_weights(model.weights - alpha * noisy_gradient(model, x, y, priv, rng))


def local_training(model: AbstractModel, dataset, priv: PrivacyParams, local_iters: int,
                   rng: np.random.Generator, learning_rate=None):
    """ local_iters passes over the data set, shuffled once per pass, in batches of B
        The final batch may be partial, it is still divided by the nominal B.
        @return trained model and its data set average loss
    """
    if len(dataset) == 0:
        raise EmptyBatch('Empty local data set')

    size = len(dataset)
    for _ in range(local_iters):
        order = rng.permutation(size)
        for start in range(0, size, priv.batch_size):
            batch = dataset.batch(order[start:start + priv.batch_size])
            model = noisy_batch_step(model, batch.x, batch.y, priv, rng, learning_rate)

    return model, model.loss(dataset.x, dataset.y)


class PlateauScheduler:
    """ Reduce the learning rate by a factor once the loss stopped decreasing for patience steps """

    def __init__(self, learning_rate, factor=.3, patience=2, enabled=True):
        self.learning_rate = learning_rate
        self.factor = factor
        self.patience = patience
        self.enabled = enabled
        self.best = np.inf
        self.num_bad_steps = 0

    def step(self, loss):
        """ Record a loss value, @return the learning rate to use next """
        if not self.enabled:
            return self.learning_rate

        if loss < self.best:
            self.best = loss
            self.num_bad_steps = 0
        else:
            self.num_bad_steps += 1
            if self.num_bad_steps >= self.patience:
                self.learning_rate *= self.factor
                self.num_bad_steps = 0
                _logger.info('Loss plateau, learning rate reduced to %g', self.learning_rate)
        return self.learning_rate

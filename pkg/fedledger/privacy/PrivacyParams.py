from . import InvalidBudget

from dataclasses import dataclass
from typing import Optional
import math


def sigma_from_budget(epsilon, delta):
    """ Gaussian mechanism noise scale sqrt(2 ln(1.25 / delta)) / epsilon

        The privacy levels reported next to the accuracy table of the reference experiments,
        (185, 0.25), (8, 0.6) and (1.89, 1.0) at delta = 1e-5, do not follow this formula
        (it gives about 0.026, 0.61 and 2.56). They were likely derived with a composition
        accountant which is not reproduced here.
    """
    if not epsilon > 0:
        raise InvalidBudget('epsilon must be positive (got %g)' % epsilon)
    if not 0 < delta < 1:
        raise InvalidBudget('delta must lie in (0, 1) (got %g)' % delta)
    return math.sqrt(2. * math.log(1.25 / delta)) / epsilon


@dataclass(frozen=True)
class PrivacyParams:
    """ Privacy budget, noise scale, gradient bound, batch size and learning rate """

    noise_scale: float = .25  # sigma, 0 in non-private mode
    clip_bound: float = 8.  # A
    batch_size: int = 32  # B
    learning_rate: float = .01  # alpha
    delta: float = 1e-5
    epsilon: Optional[float] = None  # None when sigma is given directly

    def __post_init__(self):
        if self.epsilon is not None:
            expected = sigma_from_budget(self.epsilon, self.delta)
            if self.noise_scale != expected:
                raise InvalidBudget('noise_scale %g does not derive from epsilon %g, delta %g (expected %g)'
                                    % (self.noise_scale, self.epsilon, self.delta, expected))
        if not 0 < self.delta < 1:
            raise InvalidBudget('delta must lie in (0, 1) (got %g)' % self.delta)
        if not self.noise_scale >= 0:
            raise InvalidBudget('noise_scale must be non-negative (got %g)' % self.noise_scale)
        if not self.clip_bound > 0:
            raise InvalidBudget('clip_bound must be positive (got %g)' % self.clip_bound)
        if not self.batch_size >= 1:
            raise InvalidBudget('batch_size must be at least 1 (got %d)' % self.batch_size)
        if not self.learning_rate >= 0:
            raise InvalidBudget('learning_rate must be non-negative (got %g)' % self.learning_rate)

    @staticmethod
    def from_budget(epsilon, delta=1e-5, **kwargs):
        """ Parameters with sigma derived from (epsilon, delta) """
        return PrivacyParams(noise_scale=sigma_from_budget(epsilon, delta), delta=delta, epsilon=epsilon, **kwargs)

    @property
    def private(self):
        return self.noise_scale > 0

    @property
    def noise_std(self):
        """ Per-coordinate standard deviation of the noise added to the summed clipped gradients """
        return self.noise_scale * self.clip_bound

from . import InvalidParameter

from dataclasses import dataclass

# Tolerance on the rho + eta = 1 weighting constraint
WEIGHT_SUM_TOLERANCE = 1e-12


@dataclass(frozen=True)
class SystemParams:
    """ System-wide economic and physical parameters, defaults from the reference parameter table """

    kappa: float = 1e-28  # chip coefficient
    phi: float = 1.  # cost per unit energy (currency / J)
    mining_reward: float = 10.  # reward per mined block (currency)
    global_iters: int = 15  # T
    threshold: float = 24 * 60.  # upload deadline (s)
    model_bits: float = 3776.  # H (bits)
    prb_bandwidth: float = 20e6  # Q (Hz)
    rho: float = .5  # utility weight
    eta: float = .5  # loss weight

    def __post_init__(self):
        _check(self.kappa > 0, 'kappa', 'kappa must be positive')
        _check(self.phi >= 0, 'phi', 'phi must be non-negative')
        _check(self.mining_reward > 0, 'mining_reward', 'mining_reward must be positive')
        _check(self.global_iters >= 1, 'global_iters', 'global_iters must be at least 1')
        _check(self.threshold > 0, 'threshold', 'threshold must be positive')
        _check(self.model_bits > 0, 'model_bits', 'model_bits must be positive')
        _check(self.prb_bandwidth > 0, 'prb_bandwidth', 'prb_bandwidth must be positive')
        _check(0. <= self.rho <= 1., 'rho', 'rho must lie in [0, 1]')
        _check(0. <= self.eta <= 1., 'eta', 'eta must lie in [0, 1]')
        _check(abs(self.rho + self.eta - 1.) <= WEIGHT_SUM_TOLERANCE, 'rho',
               'rho + eta must equal 1 (got %g + %g)' % (self.rho, self.eta))


def _check(condition, field, message):
    if not condition:
        raise InvalidParameter(field, message)

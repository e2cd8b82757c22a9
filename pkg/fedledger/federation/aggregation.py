#
# Weighted aggregation, global loss, total utility and weighted objective
#

from . import LengthMismatch, WeightSumViolation, EmptyFederation
from ..economics.SystemParams import SystemParams

import numpy as np
import math

# Tolerance on the sum of the aggregation weights
WEIGHT_SUM_TOLERANCE = 1e-12


def aggregate(locals_):
    """ Coordinate-wise convex combination sum p_n w_n
        @param locals_ list of (weight vector, p_n)
    """
    if not locals_:
        raise EmptyFederation('Nothing to aggregate')

    lengths = {len(w) for w, _ in locals_}
    if len(lengths) != 1:
        raise LengthMismatch('Local weight vectors of lengths %s' % sorted(lengths))

    p = np.array([p for _, p in locals_], dtype=np.float64)
    if np.any(p < 0) or abs(math.fsum(p) - 1.) > WEIGHT_SUM_TOLERANCE:
        raise WeightSumViolation('Aggregation weights sum to %.17g' % math.fsum(p))

    weights = np.stack([np.asarray(w, dtype=np.float64) for w, _ in locals_])
    return p @ weights


def mean_participant_loss(losses):
    """ Unweighted mean of the participant losses """
    if len(losses) == 0:
        raise EmptyFederation('No participant loss to average')
    return math.fsum(losses) / len(losses)


def global_loss(models, plan):
    """ J, mean over the participants of the data set average loss of their model
        @param models mapping MC id -> model, evaluated after aggregation
        @param plan FederationPlan holding the participant data sets
    """
    if not plan.participants:
        raise EmptyFederation('Global loss of a federation without participant')
    losses = []
    for n in plan.participants:
        data = plan.datasets[n]
        losses.append(models[n].loss(data.x, data.y))
    return mean_participant_loss(losses)


def total_utility(indicator, economics):
    """ U, sum of the miner and MC utilities over the associated pairs
        @param indicator associated (MC id, miner id) pairs
        @param economics mapping (MC id, miner id) -> PairEconomics
    """
    return math.fsum(economics[pair].miner_utility + economics[pair].mc_utility for pair in sorted(indicator))


def objective_f(utility, loss, sys: SystemParams):
    """ F = rho U + eta (-J) """
    return sys.rho * utility - sys.eta * loss

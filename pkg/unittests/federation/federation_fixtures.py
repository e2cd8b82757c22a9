from fedledger.economics.SystemParams import SystemParams
from fedledger.federation.FederationPlan import FederationPlan
from fedledger.privacy.PrivacyParams import PrivacyParams
from fedledger.dataset.generators import TwoGaussiansGenerator

import numpy as np


def make_plan(num_participants, num_miners, feature_dim, samples=8, privacy=None, sys_params=None,
              local_iters=1, seed=0):
    """ Participants with equal data sizes, MC n associated with miner n mod S """
    rng = np.random.default_rng(seed)
    generator = TwoGaussiansGenerator(feature_dim)
    participants = tuple(range(num_participants))
    return FederationPlan(participants=participants,
                          association={n: n % num_miners for n in participants},
                          aggregation_weights={n: 1. / num_participants for n in participants},
                          datasets={n: generator.sample(samples, rng) for n in participants},
                          local_iters={n: local_iters for n in participants},
                          privacy=privacy or PrivacyParams(),
                          sys=sys_params or SystemParams(),
                          num_miners=num_miners,
                          total_utility=100.)

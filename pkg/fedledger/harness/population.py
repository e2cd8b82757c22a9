#
# Seeded draws of medical centers, miners, channels and data sets
#

from .ExperimentConfig import ExperimentConfig
from ..economics import utility
from ..economics.MedicalCenterSpec import MedicalCenterSpec, ChannelSpec
from ..economics.SystemParams import SystemParams
from ..dataset.generators import get_generators

from dataclasses import replace
import numpy as np
import logging

_logger = logging.getLogger(__name__)


def create_generator(cfg: ExperimentConfig):
    builder = get_generators(cfg.dataset.generator)
    return builder(cfg.dataset.feature_dim, separation=cfg.dataset.separation,
                   class_offset=cfg.dataset.class_offset)


def sample_population(cfg: ExperimentConfig, rng: np.random.Generator, data_rng: np.random.Generator = None):
    """ Medical centers, miner ids and channels drawn uniformly over the configured ranges
        @param data_rng when given, each MC gets a local data set drawn from this stream
        @return (list of MedicalCenterSpec, list of miner ids, mapping (MC id, miner id) -> ChannelSpec)
    """
    ranges = cfg.ranges
    data_size = cfg.dataset.samples_per_mc
    generator = create_generator(cfg) if data_rng is not None else None

    mcs = []
    for n in range(cfg.num_mcs):
        mc = MedicalCenterSpec(id=n,
                               data_size=data_size,
                               cpu_rate=float(rng.uniform(*ranges.cpu_rate)),
                               cycles_per_sample=float(rng.uniform(*ranges.cycles_per_sample)),
                               local_iters=int(rng.integers(ranges.local_iters[0], ranges.local_iters[1] + 1)),
                               tx_power=float(utility.power_to_watts(rng.uniform(*ranges.tx_power), cfg.power_unit)))
        if generator is not None:
            dataset = generator.sample(data_size, data_rng)
            dataset.name = 'MC %d' % n
            mc = replace(mc, dataset=dataset)
        mcs.append(mc)

    miners = list(range(cfg.num_miners))
    channels = {}
    for mc in mcs:
        for s in miners:
            channels[(mc.id, s)] = ChannelSpec(prb_count=int(rng.integers(ranges.prb_count[0], ranges.prb_count[1] + 1)),
                                               sinr_db=float(rng.uniform(*ranges.sinr_db)))

    _logger.debug('Population of %d MCs and %d miners sampled%s', len(mcs), len(miners),
                  ', data: ' + generator.label() if generator is not None else '')
    return mcs, miners, channels


def sample_test_set(cfg: ExperimentConfig, rng: np.random.Generator):
    """ Held-out samples of the same distribution as the MC data sets """
    dataset = create_generator(cfg).sample(cfg.dataset.test_samples, rng)
    dataset.name = 'test'
    return dataset


def sample_small_instance(rng: np.random.Generator, max_mcs=8, max_miners=3, sys: SystemParams = None):
    """ Random small association instance, the deadline drawn between the pair times
        so that part of the pairs miss it
        @return (list of MedicalCenterSpec, list of miner ids, channels, SystemParams)
    """
    if sys is None:
        sys = SystemParams()

    num_mcs = int(rng.integers(2, max_mcs + 1))
    num_miners = int(rng.integers(1, max_miners + 1))

    mcs = [MedicalCenterSpec(id=n,
                             data_size=int(rng.integers(50, 501)),
                             cpu_rate=float(rng.uniform(1e9, 2.6e9)),
                             cycles_per_sample=float(rng.uniform(1e4, 3e4)),
                             local_iters=int(rng.integers(1, 11)),
                             tx_power=float(utility.dbw_to_watts(rng.uniform(1., 10.))))
           for n in range(num_mcs)]
    miners = list(range(num_miners))
    channels = {(mc.id, s): ChannelSpec(prb_count=int(rng.integers(1, 11)), sinr_db=float(rng.uniform(13., 20.)))
                for mc in mcs for s in miners}

    times = [utility.comp_time(mc) + utility.trans_time(sys, utility.data_rate(channels[(mc.id, s)], sys))
             for mc in mcs for s in miners]
    sys = replace(sys, threshold=float(rng.uniform(min(times), max(times))))
    return mcs, miners, channels, sys

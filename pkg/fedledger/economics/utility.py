#
# Energies, delays, data rates, rewards and utilities of the (MC, miner) pairs
#
# All functions are pure: same inputs, bit-identical outputs.
#

from . import ZeroRate, ZeroTotalData
from .SystemParams import SystemParams
from .MedicalCenterSpec import MedicalCenterSpec, ChannelSpec
from .PairEconomics import PairEconomics

import numpy as np

# Transmit power units accepted by the configuration
DBW = 'dBW'
DBM = 'dBm'


def db_to_linear(value_db):
    """ Power ratio in dB to linear ratio """
    return 10. ** (value_db / 10.)


def dbw_to_watts(value_dbw):
    return db_to_linear(value_dbw)


def dbm_to_watts(value_dbm):
    return db_to_linear(value_dbm - 30.)


def power_to_watts(value, unit=DBW):
    """ Convert a configured transmit power to watts """
    if unit == DBW:
        return dbw_to_watts(value)
    elif unit == DBM:
        return dbm_to_watts(value)
    raise ValueError("Unknown power unit '%s'" % unit)


def comp_energy(mc: MedicalCenterSpec, sys: SystemParams):
    """ Energy of the local training, kappa I beta D f^2 (J) """
    return sys.kappa * mc.local_iters * mc.cycles_per_sample * mc.data_size * mc.cpu_rate ** 2


def comp_time(mc: MedicalCenterSpec):
    """ Local training time, I beta D / f (s) """
    return mc.local_iters * mc.cycles_per_sample * mc.data_size / mc.cpu_rate


def data_rate(chan: ChannelSpec, sys: SystemParams):
    """ Shannon uplink rate Q V log2(1 + SINR) with SINR converted from dB (bits/s) """
    return sys.prb_bandwidth * chan.prb_count * np.log2(1. + db_to_linear(chan.sinr_db))


def trans_time(sys: SystemParams, rate):
    """ Time to upload the model T times, T H / rate (s) """
    if rate == 0:
        raise ZeroRate('Null data rate, the model can not be uploaded')
    return sys.global_iters * sys.model_bits / rate


def trans_energy(mc: MedicalCenterSpec, trans_time_s):
    """ Upload energy, time x transmit power (J) """
    return trans_time_s * mc.tx_power


def miner_revenue(sys: SystemParams, assoc_count):
    """ Revenue of a miner mining one block per associated MC and global iteration """
    return sys.global_iters * sys.mining_reward * assoc_count


def mc_reward(revenue, mc_data, total_data):
    """ Share of the miner revenue paid to an MC, proportional to its data size """
    if total_data == 0:
        raise ZeroTotalData('Reward share requested against an empty data pool')
    return revenue * mc_data / total_data


def pair_economics(mc: MedicalCenterSpec, chan: ChannelSpec, sys: SystemParams,
                   assoc_count, total_data) -> PairEconomics:
    """ All quantities of one (MC, miner) pair, assuming the miner serves assoc_count MCs """

    t_comp = comp_time(mc)
    t_trans = trans_time(sys, data_rate(chan, sys))
    e_comp = comp_energy(mc, sys)
    e_trans = trans_energy(mc, t_trans)

    revenue = miner_revenue(sys, assoc_count)
    reward = mc_reward(revenue, mc.data_size, total_data)

    return PairEconomics(comp_time=t_comp,
                         trans_time=t_trans,
                         comp_energy=e_comp,
                         trans_energy=e_trans,
                         reward=reward,
                         miner_utility=revenue - reward,
                         mc_utility=reward - sys.phi * (e_comp + e_trans),
                         feasible=bool(t_comp + t_trans <= sys.threshold))


def economics_table(mcs, miners, channels, sys: SystemParams, assoc_count, total_data=None):
    """ PairEconomics of every (MC id, miner id) pair
        @param channels mapping (MC id, miner id) -> ChannelSpec
        @param total_data data pool of the reward share, defaults to the population data size
    """
    if total_data is None:
        total_data = sum(mc.data_size for mc in mcs)
    return {(mc.id, s): pair_economics(mc, channels[(mc.id, s)], sys, assoc_count, total_data)
            for mc in mcs for s in miners}


def realized_economics(indicator, mcs, channels, sys: SystemParams, loads, total_data=None):
    """ PairEconomics of the associated pairs, each miner revenue counting the MCs it actually serves
        @param indicator associated (MC id, miner id) pairs
        @param loads mapping miner id -> number of associated MCs
    """
    if total_data is None:
        total_data = sum(mc.data_size for mc in mcs)
    by_id = {mc.id: mc for mc in mcs}
    return {(n, s): pair_economics(by_id[n], channels[(n, s)], sys, loads[s], total_data)
            for n, s in sorted(indicator)}

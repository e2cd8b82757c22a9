from . import NoFeasiblePairs, AS_WRITTEN, SELF_UTILITY, orientations
from ..economics.SystemParams import SystemParams
from ..economics import utility
from ..utils.statistics import rank_descending

from dataclasses import dataclass
from typing import Dict, Tuple, FrozenSet
import logging

_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PreferenceTables:
    """ Feasible candidates and ordered preference lists of both sides """

    mc_prefs: Dict[int, Tuple[int, ...]]  # P_n
    miner_prefs: Dict[int, Tuple[int, ...]]  # P_s
    mc_candidates: Dict[int, FrozenSet[int]]  # B_n, miners with positive miner utility
    miner_candidates: Dict[int, FrozenSet[int]]  # A_s, MCs meeting the deadline
    mc_utility_lists: Dict[int, Tuple[float, ...]]  # values ranking P_n, non-increasing
    miner_utility_lists: Dict[int, Tuple[float, ...]]  # values ranking P_s, non-increasing
    economics: Dict[Tuple[int, int], object]  # (MC id, miner id) -> PairEconomics
    orientation: str = SELF_UTILITY

    @property
    def mc_ids(self):
        return sorted(self.mc_prefs)

    @property
    def miner_ids(self):
        return sorted(self.miner_prefs)

    def mc_rank(self, mc_id, miner_id):
        """ Rank of miner_id in the preference list of mc_id (0 is best) """
        return self.mc_prefs[mc_id].index(miner_id)

    def miner_rank(self, miner_id, mc_id):
        """ Rank of mc_id in the preference list of miner_id (0 is best) """
        return self.miner_prefs[miner_id].index(mc_id)


def build_preferences(mcs, miners, channels, sys: SystemParams, orientation=SELF_UTILITY,
                      assoc_count=1, total_data=None) -> PreferenceTables:
    """ Filter feasible candidates and rank them
        @param channels mapping (MC id, miner id) -> ChannelSpec
        @param assoc_count association count assumed while no association exists yet
        @param total_data data pool of the reward share, defaults to the population data size
    """

    if orientation not in orientations:
        raise ValueError("Unknown orientation '%s'" % orientation)
    if not mcs or not miners:
        raise NoFeasiblePairs('At least one MC and one miner are required')

    econ = utility.economics_table(mcs, miners, channels, sys, assoc_count, total_data)
    mc_ids = [mc.id for mc in mcs]
    miner_ids = list(miners)

    mc_candidates = {n: frozenset(s for s in miner_ids if econ[(n, s)].miner_utility > 0) for n in mc_ids}
    miner_candidates = {s: frozenset(n for n in mc_ids if econ[(n, s)].feasible) for s in miner_ids}

    if orientation == AS_WRITTEN:
        mc_side, miner_side = 'miner_utility', 'mc_utility'
    else:
        mc_side, miner_side = 'mc_utility', 'miner_utility'

    def mc_value(n, s):
        return getattr(econ[(n, s)], mc_side)

    def miner_value(s, n):
        return getattr(econ[(n, s)], miner_side)

    # Lists hold mutually acceptable partners only
    mc_prefs, mc_lists = {}, {}
    for n in mc_ids:
        acceptable = [s for s in miner_ids if s in mc_candidates[n] and n in miner_candidates[s]]
        mc_prefs[n] = tuple(rank_descending([mc_value(n, s) for s in acceptable], acceptable))
        mc_lists[n] = tuple(mc_value(n, s) for s in mc_prefs[n])

    miner_prefs, miner_lists = {}, {}
    for s in miner_ids:
        acceptable = [n for n in mc_ids if n in miner_candidates[s] and s in mc_candidates[n]]
        miner_prefs[s] = tuple(rank_descending([miner_value(s, n) for n in acceptable], acceptable))
        miner_lists[s] = tuple(miner_value(s, n) for n in miner_prefs[s])

    if not any(mc_prefs.values()):
        raise NoFeasiblePairs('No feasible (MC, miner) pair among %d MCs and %d miners'
                              % (len(mc_ids), len(miner_ids)))

    _logger.debug('Preferences built (%s): %d acceptable pairs', orientation,
                  sum(len(p) for p in mc_prefs.values()))

    return PreferenceTables(mc_prefs=mc_prefs, miner_prefs=miner_prefs,
                            mc_candidates=mc_candidates, miner_candidates=miner_candidates,
                            mc_utility_lists=mc_lists, miner_utility_lists=miner_lists,
                            economics=econ, orientation=orientation)

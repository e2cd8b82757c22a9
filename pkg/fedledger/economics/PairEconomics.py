from dataclasses import dataclass


@dataclass(frozen=True)
class PairEconomics:
    """ Times, energies, reward and both utilities of one (MC, miner) pair """

    comp_time: float
    trans_time: float
    comp_energy: float
    trans_energy: float
    reward: float
    miner_utility: float
    mc_utility: float
    feasible: bool

    @property
    def total_time(self):
        return self.comp_time + self.trans_time

    @property
    def acceptable(self):
        """ Pair may be associated: deadline met and the miner keeps a positive utility """
        return self.feasible and self.miner_utility > 0

from . import EmptyFederation, WeightSumViolation
from .aggregation import total_utility, WEIGHT_SUM_TOLERANCE
from ..economics.SystemParams import SystemParams
from ..privacy.PrivacyParams import PrivacyParams

from dataclasses import dataclass
from typing import Dict, Tuple
import math


@dataclass(frozen=True)
class FederationPlan:
    """ Participants of the federation with their miner, aggregation weight and local data """

    participants: Tuple[int, ...]  # K, ascending MC ids
    association: Dict[int, int]  # MC id -> miner id
    aggregation_weights: Dict[int, float]  # p_n = D_n / D
    datasets: Dict[int, object]  # MC id -> DataSet
    local_iters: Dict[int, int]  # MC id -> I_n
    privacy: PrivacyParams
    sys: SystemParams
    num_miners: int
    total_utility: float = 0.  # U of the association, constant over the rounds

    def __post_init__(self):
        if not self.participants:
            raise EmptyFederation('No MC takes part in the federation')
        p = [self.aggregation_weights[n] for n in self.participants]
        if min(p) <= 0 or abs(math.fsum(p) - 1.) > WEIGHT_SUM_TOLERANCE:
            raise WeightSumViolation('Aggregation weights sum to %.17g' % math.fsum(p))

    @property
    def data_size(self):
        """ D, data held by the participants """
        return sum(len(self.datasets[n]) for n in self.participants)

    @staticmethod
    def from_association(result, economics, mcs, privacy: PrivacyParams, sys: SystemParams, num_miners):
        """ Plan of the MCs associated by an AssociationResult
            @param economics mapping (MC id, miner id) -> PairEconomics used to value the association
            @param mcs MedicalCenterSpec list, datasets set
        """
        by_id = {mc.id: mc for mc in mcs}
        participants = tuple(sorted(result.participants))
        if not participants:
            raise EmptyFederation('No MC takes part in the federation')

        data = sum(by_id[n].data_size for n in participants)
        return FederationPlan(participants=participants,
                              association={n: result.assignment[n] for n in participants},
                              aggregation_weights={n: by_id[n].data_size / data for n in participants},
                              datasets={n: by_id[n].dataset for n in participants},
                              local_iters={n: by_id[n].local_iters for n in participants},
                              privacy=privacy, sys=sys, num_miners=num_miners,
                              total_utility=total_utility(result.indicator, economics))

from .SystemParams import _check

from dataclasses import dataclass
import math


@dataclass(frozen=True)
class MedicalCenterSpec:
    """ Static description of a medical center (FL client) """

    id: int
    data_size: int  # D_n (samples)
    cpu_rate: float  # f_n (cycles / s)
    cycles_per_sample: float  # beta_n
    local_iters: int  # I_n
    tx_power: float  # mu_n (W)
    dataset: object = None  # local training samples X_n, a DataSet

    def __post_init__(self):
        _check(self.data_size >= 1, 'data_size', 'MC %s: data_size must be at least 1' % self.id)
        _check(self.cpu_rate > 0, 'cpu_rate', 'MC %s: cpu_rate must be positive' % self.id)
        _check(self.cycles_per_sample > 0, 'cycles_per_sample',
               'MC %s: cycles_per_sample must be positive' % self.id)
        _check(self.local_iters >= 1, 'local_iters', 'MC %s: local_iters must be at least 1' % self.id)
        _check(self.tx_power > 0, 'tx_power', 'MC %s: tx_power must be positive' % self.id)
        if self.dataset is not None:
            _check(len(self.dataset) == self.data_size, 'dataset',
                   'MC %s: dataset holds %d samples, data_size is %d' % (self.id, len(self.dataset), self.data_size))


@dataclass(frozen=True)
class ChannelSpec:
    """ Uplink channel between one MC and one miner """

    prb_count: int  # V_{n,s}
    sinr_db: float

    def __post_init__(self):
        _check(self.prb_count >= 1, 'prb_count', 'prb_count must be at least 1')
        _check(math.isfinite(self.sinr_db), 'sinr_db', 'sinr_db must be finite')

from fedledger.economics.SystemParams import SystemParams
from fedledger.economics.MedicalCenterSpec import MedicalCenterSpec, ChannelSpec


def make_instance(num_mcs, num_miners, sinr=None, data_sizes=None):
    """ MCs with identical computation, channels differing by SINR only
        @param sinr mapping (MC id, miner id) -> SINR dB, 13 dB when absent
    """
    sinr = sinr or {}
    data_sizes = data_sizes or [100 + 10 * n for n in range(num_mcs)]
    mcs = [MedicalCenterSpec(id=n, data_size=data_sizes[n], cpu_rate=2e9, cycles_per_sample=2e4, local_iters=10,
                             tx_power=2.) for n in range(num_mcs)]
    miners = list(range(num_miners))
    channels = {(n, s): ChannelSpec(prb_count=1, sinr_db=sinr.get((n, s), 13.)) for n in range(num_mcs)
                for s in miners}
    return mcs, miners, channels, SystemParams()

from fedledger.economics import InvalidParameter
from fedledger.economics.SystemParams import SystemParams
from fedledger.economics.MedicalCenterSpec import ChannelSpec

import pytest


class TestSystemParams:

    def test_defaults(self):
        sys_params = SystemParams()

        assert sys_params.kappa == 1e-28
        assert sys_params.threshold == 1440.
        assert sys_params.model_bits == 3776.
        assert sys_params.prb_bandwidth == 20e6
        assert sys_params.global_iters == 15
        assert sys_params.rho + sys_params.eta == 1.

    def test_weights_must_sum_to_one(self):
        with pytest.raises(InvalidParameter) as e:
            SystemParams(rho=.7, eta=.5)
        assert e.value.field == 'rho'

    @pytest.mark.parametrize('field, value', [
        ('kappa', 0.), ('mining_reward', -1.), ('global_iters', 0), ('threshold', 0.), ('model_bits', 0.),
    ])
    def test_invalid_values(self, field, value):
        with pytest.raises(InvalidParameter) as e:
            SystemParams(**{field: value})
        assert e.value.field == field


def test_channel_needs_one_prb():
    with pytest.raises(InvalidParameter):
        ChannelSpec(prb_count=0, sinr_db=13.)

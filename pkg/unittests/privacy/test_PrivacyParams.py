from fedledger.privacy import InvalidBudget
from fedledger.privacy.PrivacyParams import PrivacyParams, sigma_from_budget

import pytest


@pytest.mark.parametrize('epsilon, sigma', [(2., 2.4224), (1.89, 2.5634)])
def test_sigma_from_budget(epsilon, sigma):
    assert sigma_from_budget(epsilon, 1e-5) == pytest.approx(sigma, abs=1e-3)


def test_sigma_decreases_with_budget():
    assert sigma_from_budget(8., 1e-5) < sigma_from_budget(1., 1e-5)


@pytest.mark.parametrize('epsilon, delta', [(0., 1e-5), (-1., 1e-5), (1., 0.), (1., 1.)])
def test_invalid_budget(epsilon, delta):
    with pytest.raises(InvalidBudget):
        sigma_from_budget(epsilon, delta)


class TestPrivacyParams:

    def test_defaults(self):
        priv = PrivacyParams()

        assert priv.noise_scale == .25
        assert priv.clip_bound == 8.
        assert priv.batch_size == 32
        assert priv.learning_rate == .01
        assert priv.private
        assert priv.noise_std == 2.

    def test_from_budget(self):
        priv = PrivacyParams.from_budget(1.89, clip_bound=4.)

        assert priv.noise_scale == pytest.approx(2.5634, abs=1e-3)
        assert priv.epsilon == 1.89
        assert priv.clip_bound == 4.

    def test_inconsistent_budget(self):
        with pytest.raises(InvalidBudget):
            PrivacyParams(noise_scale=.25, epsilon=1.89)

    def test_non_private(self):
        assert not PrivacyParams(noise_scale=0.).private

    @pytest.mark.parametrize('kwargs', [dict(noise_scale=-.1), dict(clip_bound=0.), dict(batch_size=0),
                                        dict(learning_rate=-1.), dict(delta=2.)])
    def test_invalid(self, kwargs):
        with pytest.raises(InvalidBudget):
            PrivacyParams(**kwargs)

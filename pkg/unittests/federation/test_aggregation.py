from fedledger.federation import LengthMismatch, WeightSumViolation, EmptyFederation
from fedledger.federation.aggregation import aggregate, mean_participant_loss, objective_f, total_utility
from fedledger.economics.SystemParams import SystemParams
from fedledger.economics.PairEconomics import PairEconomics

import numpy as np
import pytest


def test_aggregate_weighted_mean():
    assert aggregate([(np.array([1.]), .25), (np.array([2.]), .75)]) == pytest.approx([1.75])


def test_aggregate_fixed_point():
    w = np.array([.3, -1.2, 4.])

    assert np.allclose(aggregate([(w, .2), (w, .5), (w, .3)]), w)


def test_aggregate_single_participant():
    w = np.array([.1, .2])

    assert np.array_equal(aggregate([(w, 1.)]), w)


def test_aggregate_permutation_invariant():
    rng = np.random.default_rng(0)
    locals_ = [(rng.standard_normal(8), p) for p in [.1, .2, .3, .4]]

    assert np.allclose(aggregate(locals_), aggregate(locals_[::-1]), atol=1e-12)


def test_aggregate_errors():
    with pytest.raises(LengthMismatch):
        aggregate([(np.ones(2), .5), (np.ones(3), .5)])
    with pytest.raises(WeightSumViolation):
        aggregate([(np.ones(2), .5), (np.ones(2), .4)])
    with pytest.raises(EmptyFederation):
        aggregate([])


def test_mean_participant_loss():
    assert mean_participant_loss([.6]) == .6
    assert mean_participant_loss([.4, .8]) == pytest.approx(.6)
    with pytest.raises(EmptyFederation):
        mean_participant_loss([])


@pytest.mark.parametrize('rho, utility, loss, expected', [
    (.5, 100., .6, 49.7),
    (1., 100., .6, 100.),
    (0., 100., .6, -.6),
])
def test_objective_f(rho, utility, loss, expected):
    assert objective_f(utility, loss, SystemParams(rho=rho, eta=1. - rho)) == pytest.approx(expected)


def test_total_utility():
    def pair(miner_utility, mc_utility):
        return PairEconomics(0., 0., 0., 0., 0., miner_utility, mc_utility, True)

    economics = {(0, 0): pair(140., 9.), (1, 0): pair(130., 8.), (1, 1): pair(100., 5.)}

    assert total_utility({(0, 0), (1, 0)}, economics) == 287.

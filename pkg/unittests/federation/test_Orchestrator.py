from fedledger.federation.Orchestrator import run_federation, comm_counters, Orchestrator
from fedledger.federation.aggregation import global_loss
from fedledger.economics.SystemParams import SystemParams
from fedledger.ledger.Chain import init_chain, verify_chain
from fedledger.privacy.PrivacyParams import PrivacyParams
from fedledger.privacy.optimizer import local_training
from fedledger.privacy.models.LogisticRegression import LogisticRegression
from fedledger.utils import rng as rng_streams

from federation_fixtures import make_plan
import numpy as np
import pytest


def run(plan, feature_dim, global_iters, seed=0, **kwargs):
    model = LogisticRegression(feature_dim)
    chain = init_chain(model.weights, difficulty=0, num_miners=plan.num_miners)
    return run_federation(plan, chain, model, global_iters, seed, **kwargs), chain


def communication(global_iters, participants, miners, weights_len):
    return global_iters * (participants * (participants + 1) * weights_len
                           + participants * (miners - 1) * weights_len)


def test_comm_counters_example():
    plan = make_plan(3, 2, feature_dim=9)

    records, chain = run(plan, 9, 2)
    counters = comm_counters(records)

    assert counters == dict(uploaded=60, downloaded=180, broadcast=60, total=300)
    assert len(chain) == 1 + 2 * 3
    assert verify_chain(chain)


def test_comm_counters_single():
    plan = make_plan(1, 1, feature_dim=4)

    records, _ = run(plan, 4, 1)

    assert comm_counters(records) == dict(uploaded=5, downloaded=5, broadcast=0, total=10)


def test_comm_identity_random_configurations():
    rng = np.random.default_rng(5)
    for _ in range(20):
        global_iters = int(rng.integers(1, 6))
        participants = int(rng.integers(1, 11))
        miners = int(rng.integers(1, 5))
        weights_len = int(rng.integers(2, 65))
        plan = make_plan(participants, miners, weights_len - 1, samples=4)

        records, _ = run(plan, weights_len - 1, global_iters)

        assert comm_counters(records)['total'] == communication(global_iters, participants, miners, weights_len)


def test_comm_counters_linear_in_rounds():
    plan = make_plan(3, 2, feature_dim=5)

    once = comm_counters(run(plan, 5, 2)[0])
    twice = comm_counters(run(plan, 5, 4)[0])

    assert {k: 2 * v for k, v in once.items()} == twice


def test_single_participant_is_local_sgd():
    priv = PrivacyParams(noise_scale=0., batch_size=4, learning_rate=.1)
    plan = make_plan(1, 1, feature_dim=3, privacy=priv, local_iters=2)

    records, _ = run(plan, 3, 1, seed=42)
    rng = rng_streams.stream(42, rng_streams.TRAINING, 0, 1)
    expected, _ = local_training(LogisticRegression(3), plan.datasets[0], priv, 2, rng)

    assert np.array_equal(records[0].global_weights, expected.weights)


def test_deterministic():
    plan = make_plan(4, 2, feature_dim=3, privacy=PrivacyParams(noise_scale=1., batch_size=4))

    a, _ = run(plan, 3, 3, seed=9)
    b, _ = run(plan, 3, 3, seed=9)

    for ra, rb in zip(a, b):
        assert np.array_equal(ra.global_weights, rb.global_weights)
        assert ra.global_loss == rb.global_loss
        assert ra.objective == rb.objective


def test_parallel_training_matches_sequential():
    plan = make_plan(4, 2, feature_dim=3, privacy=PrivacyParams(noise_scale=1., batch_size=4))

    sequential, _ = run(plan, 3, 2, seed=3)
    parallel, _ = run(plan, 3, 2, seed=3, workers=4)

    assert np.array_equal(sequential[-1].global_weights, parallel[-1].global_weights)


def test_objective_decomposition():
    plan = make_plan(3, 2, feature_dim=3, sys_params=SystemParams(rho=.3, eta=.7))

    records, _ = run(plan, 3, 3)

    for record in records:
        assert record.total_utility == 100.
        assert record.objective == .3 * 100. - .7 * record.global_loss


def test_chain_transports_local_weights():
    plan = make_plan(3, 2, feature_dim=3, privacy=PrivacyParams(noise_scale=.5, batch_size=4))
    model = LogisticRegression(3)
    chain = init_chain(model.weights, difficulty=0, num_miners=2)
    orchestrator = Orchestrator(plan, chain, model, seed=1)

    local = orchestrator.train_participants(1, plan.privacy.learning_rate)
    orchestrator.chain = init_chain(model.weights, difficulty=0, num_miners=2)
    orchestrator.run_round(1)

    for n, weights in orchestrator.chain.fetch_round_weights(1, 3):
        assert weights.tobytes() == local[n].tobytes()


def test_global_loss_non_increasing_without_noise():
    priv = PrivacyParams(noise_scale=0., clip_bound=1e6, batch_size=64, learning_rate=.1)
    plan = make_plan(4, 2, feature_dim=5, samples=64, privacy=priv)

    records, _ = run(plan, 5, 15)
    losses = [r.global_loss for r in records]

    assert all(b <= a + 1e-6 for a, b in zip(losses, losses[1:]))
    assert losses[-1] < np.log(2.)


def test_global_loss_of_shared_model():
    plan = make_plan(2, 1, feature_dim=3)
    model = LogisticRegression(3)

    assert global_loss({0: model, 1: model}, plan) == pytest.approx(np.log(2.))


def test_test_set_metrics():
    plan = make_plan(2, 1, feature_dim=3)
    test_set = plan.datasets[0]

    records, _ = run(plan, 3, 2, test_set=test_set)

    assert 0. <= records[-1].test_accuracy <= 1.
    assert records[-1].test_loss > 0.


def test_learning_rate_decay_reported():
    priv = PrivacyParams(noise_scale=1., batch_size=8, learning_rate=.05)
    plan = make_plan(2, 1, feature_dim=3, privacy=priv)

    constant, _ = run(plan, 3, 6)
    decayed, _ = run(plan, 3, 6, lr_decay=True)
    rates = [r.learning_rate for r in decayed]

    assert [r.learning_rate for r in constant] == [.05] * 6
    assert rates[0] == .05
    assert all(b <= a for a, b in zip(rates, rates[1:]))
    assert all(any(r == pytest.approx(.05 * .3 ** k) for k in range(6)) for r in rates)

from . import EmptyFederation
from .FederationPlan import FederationPlan
from .RoundRecord import RoundRecord
from .aggregation import aggregate, global_loss, objective_f
from ..ledger import LedgerError
from ..ledger.Chain import Chain
from ..privacy.optimizer import local_training, PlateauScheduler
from ..privacy.models.AbstractModel import AbstractModel
from ..utils import rng as rng_streams

from concurrent.futures import ThreadPoolExecutor
from typing import List
import numpy as np
import time
import logging

_logger = logging.getLogger(__name__)


class Orchestrator:
    """ Blockchain-based private federated training:
        local training, upload and mining, download of all the round weights and aggregation
    """

    def __init__(self, plan: FederationPlan, chain: Chain, model: AbstractModel, seed: int,
                 test_set=None, workers=1, lr_decay=False):
        """
            @param model template model, its weights are replaced by the chain genesis weights
            @param seed root of the per-(MC, round) training and mining streams
            @param test_set optional held-out DataSet evaluated each round
            @param workers local trainings run in parallel when above 1
        """
        self.plan = plan
        self.chain = chain
        self.model = model.with_weights(chain.payload(chain.blocks[0]))
        self.seed = seed
        self.test_set = test_set
        self.workers = workers
        self.scheduler = PlateauScheduler(plan.privacy.learning_rate, enabled=lr_decay)

        self.uploaded = 0
        self.downloaded = 0
        self.broadcast = 0
        self.records: List[RoundRecord] = []

    @property
    def global_weights(self):
        return self.model.weights

    def _train(self, n, round_, learning_rate):
        rng = rng_streams.stream(self.seed, rng_streams.TRAINING, n, round_)
        trained, loss = local_training(self.model, self.plan.datasets[n], self.plan.privacy,
                                       self.plan.local_iters[n], rng, learning_rate)
        _logger.debug('Round %d: MC %d local loss %.6f', round_, n, loss)
        return n, trained.weights

    def train_participants(self, round_, learning_rate):
        """ Local weights of every participant trained from the current global model, by MC id """
        participants = self.plan.participants
        if self.workers > 1:
            with ThreadPoolExecutor(max_workers=self.workers) as executor:
                trained = list(executor.map(lambda n: self._train(n, round_, learning_rate), participants))
        else:
            trained = [self._train(n, round_, learning_rate) for n in participants]
        return dict(trained)

    def run_round(self, round_) -> RoundRecord:
        start = time.perf_counter()
        plan = self.plan
        learning_rate = self.scheduler.learning_rate
        local_weights = self.train_participants(round_, learning_rate)

        # Appends are serialized in (miner, MC) order
        broadcast_before = self.chain.broadcast_log
        for n in sorted(plan.participants, key=lambda n: (plan.association[n], n)):
            rng = rng_streams.stream(self.seed, rng_streams.MINING, round_, n)
            self.chain.mine_block(round_, plan.association[n], n, local_weights[n], rng)

        fetched = self.chain.fetch_round_weights(round_, len(plan.participants))
        size = self.model.num_weights
        self.uploaded += len(local_weights) * size
        self.broadcast += (self.chain.broadcast_log - broadcast_before) * size
        # Every participant downloads every round weight vector
        self.downloaded += len(plan.participants) * len(fetched) * size

        self.model = self.model.with_weights(aggregate([(w, plan.aggregation_weights[n]) for n, w in fetched]))

        loss = global_loss({n: self.model for n in plan.participants}, plan)
        if self.test_set is not None and len(self.test_set) > 0:
            test_loss = self.model.loss(self.test_set.x, self.test_set.y)
            test_accuracy = self.model.accuracy(self.test_set.x, self.test_set.y)
        else:
            test_loss = test_accuracy = np.nan

        objective = objective_f(plan.total_utility, loss, plan.sys)
        self.scheduler.step(loss)

        record = RoundRecord(round=round_, global_weights=self.model.weights, global_loss=loss,
                             test_loss=test_loss, test_accuracy=test_accuracy,
                             total_utility=plan.total_utility, objective=objective,
                             comm_weights_uploaded=self.uploaded, comm_weights_downloaded=self.downloaded,
                             comm_weights_broadcast=self.broadcast, learning_rate=learning_rate,
                             wall_time=time.perf_counter() - start)
        self.records.append(record)

        _logger.info('Round %d: J = %.6f, F = %.6f, test accuracy = %.4f', round_, loss, objective, test_accuracy)
        return record

    def run(self, global_iters) -> List[RoundRecord]:
        for round_ in range(1, global_iters + 1):
            try:
                self.run_round(round_)
            except LedgerError as e:
                _logger.error('Round %d aborted: %s', round_, e.message)
                raise
        return self.records


def run_federation(plan: FederationPlan, chain: Chain, model: AbstractModel, global_iters, seed,
                   test_set=None, workers=1, lr_decay=False) -> List[RoundRecord]:
    """ Train for global_iters rounds from the chain genesis weights, one RoundRecord per round """
    if not plan.participants:
        raise EmptyFederation('No MC takes part in the federation')
    orchestrator = Orchestrator(plan, chain, model, seed, test_set, workers, lr_decay)
    return orchestrator.run(global_iters)


def comm_counters(records: List[RoundRecord]):
    """ Weights uploaded, downloaded and broadcast over a completed run """
    if not records:
        return dict(uploaded=0, downloaded=0, broadcast=0, total=0)
    last = records[-1]
    return dict(uploaded=last.comm_weights_uploaded, downloaded=last.comm_weights_downloaded,
                broadcast=last.comm_weights_broadcast, total=last.comm_weights_total)

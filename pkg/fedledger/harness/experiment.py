#
# Experiment pipeline: population, association, chain, federation and metrics rows
#

from .ExperimentConfig import ExperimentConfig, MMA
from .metrics import rows_from_records
from .population import sample_population, sample_test_set, sample_small_instance
from ..Progress import Progress
from ..matching import MatchingError, NoFeasiblePairs, SELF_UTILITY
from ..economics.utility import realized_economics
from ..matching.PreferenceTables import build_preferences
from ..matching.MinerAssociation import run_mma, random_association, AssociationResult
from ..matching.stability import find_blocking_pairs, oracle_agrees
from ..ledger.Chain import init_chain, Chain
from ..federation.FederationPlan import FederationPlan
from ..federation.Orchestrator import run_federation
from ..privacy.models import create_model
from ..utils import rng as rng_streams
from ..utils.statistics import relative_gap

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import List, Optional, Any
import asyncio
import math
import time
import numpy as np
import logging

_logger = logging.getLogger(__name__)


@dataclass
class ExperimentResult:
    """ Rows and artifacts of one experiment """
    label: str
    value: Any  # sweep value, None outside sweeps
    config: ExperimentConfig
    rows: List = field(default_factory=list)
    association: Optional[AssociationResult] = None
    chain: Optional[Chain] = None
    wall_time: float = 0.
    error: Optional[str] = None  # why a sweep point produced no rows

    @property
    def final(self):
        return self.rows[-1] if self.rows else None


def run_experiment(cfg: ExperimentConfig, label=None, value=None, keep_chain=True) -> ExperimentResult:
    """ Sample the population, associate MCs with miners, then train over the chain
        NoFeasiblePairs raised when no MC can be associated
    """
    start = time.perf_counter()
    label = cfg.name if label is None else label
    seed = cfg.seed
    _logger.info("Experiment '%s' started, seed %d", label, seed)

    mcs, miners, channels = sample_population(cfg, rng_streams.stream(seed, rng_streams.POPULATION),
                                              rng_streams.stream(seed, rng_streams.DATASET))
    test_set = sample_test_set(cfg, rng_streams.stream(seed, rng_streams.TEST_SET))

    prefs = build_preferences(mcs, miners, channels, cfg.sys, cfg.association.orientation,
                              cfg.association.initial_count, cfg.association.total_data)
    if cfg.association.mode == MMA:
        association = run_mma(prefs, capacity=cfg.association.capacity)
    else:
        association = random_association(prefs, rng_streams.stream(seed, rng_streams.ASSOCIATION))
    _logger.info('Association (%s): %d participants, miner load %s', association.mode,
                 len(association.participants), association.miner_load(miners))

    model = create_model(cfg.architecture, cfg.dataset.feature_dim, rng_streams.stream(seed, rng_streams.MODEL_INIT),
                         cfg.hidden_width)
    chain = init_chain(model.weights, cfg.difficulty, cfg.num_miners, cfg.sys.mining_reward, cfg.embed_payload)
    # Utilities of the realized association, miner revenues counting their actual load
    economics = realized_economics(association.indicator, mcs, channels, cfg.sys, association.miner_load(miners),
                                   cfg.association.total_data)
    plan = FederationPlan.from_association(association, economics, mcs, cfg.privacy, cfg.sys, cfg.num_miners)

    records = run_federation(plan, chain, model, cfg.sys.global_iters, seed, test_set,
                             workers=cfg.train_workers, lr_decay=cfg.lr_decay)
    rows = rows_from_records(records, label, cfg, association)

    wall_time = time.perf_counter() - start
    _logger.info("Experiment '%s' done in %.2fs, final F = %.6f", label, wall_time, rows[-1].objective)
    return ExperimentResult(label=label, value=value, config=cfg, rows=rows, association=association,
                            chain=chain if keep_chain else None, wall_time=wall_time)


def _run_point(point):
    label, value, cfg = point
    try:
        return run_experiment(cfg, label, value, keep_chain=False)
    except NoFeasiblePairs as e:
        _logger.error("Sweep point '%s' skipped: %s", label, e.message)
        return ExperimentResult(label=label, value=value, config=cfg, error=e.message)


def point_status(result: ExperimentResult):
    """ Progress status of a finished sweep point """
    if result.error is not None or result.final is None:
        return Progress.ERROR
    if not math.isfinite(result.final.global_loss):
        return Progress.WARN
    return Progress.INFO


async def run_sweep(cfg: ExperimentConfig, workers=1, progress: Progress = None) -> List[ExperimentResult]:
    """ Every (value, seed) point of the configuration sweep, results in sweep order
        Points run in a process pool when workers is above 1
    """
    points = cfg.experiments()
    if progress is not None:
        progress.reset(len(points))

    def record(result):
        if progress is not None:
            progress.forward(1, point_status(result), result.error or result.label)
            _logger.info("Sweep %.0f%% done, '%s' finished", progress.percent, result.label)

    if workers <= 1:
        results = []
        for point in points:
            results.append(_run_point(point))
            record(results[-1])
        return results

    loop = asyncio.get_running_loop()
    with ProcessPoolExecutor(max_workers=workers) as executor:
        futures = [loop.run_in_executor(executor, _run_point, point) for point in points]
        for future in asyncio.as_completed(futures):
            record(await future)
        # gather keeps the sweep order
        return list(await asyncio.gather(*futures))


@dataclass(frozen=True)
class SweepSummary:
    """ Means of the final round values over the seeds of one sweep value """
    value: Any
    seeds: int
    objective: float
    global_loss: float
    test_accuracy: float
    wall_time: float


def summarize(results: List[ExperimentResult]) -> List[SweepSummary]:
    """ One summary per sweep value with at least one finished point, in sweep order """
    values = []
    for result in results:
        if result.value not in values:
            values.append(result.value)

    summaries = []
    for value in values:
        finals = [r for r in results if r.value == value and r.final is not None]
        if not finals:
            continue
        summaries.append(SweepSummary(value=value, seeds=len(finals),
                                      objective=float(np.mean([r.final.objective for r in finals])),
                                      global_loss=float(np.mean([r.final.global_loss for r in finals])),
                                      test_accuracy=float(np.mean([r.final.test_accuracy for r in finals])),
                                      wall_time=float(np.mean([r.wall_time for r in finals]))))
    return summaries


def association_gap(summaries: List[SweepSummary], mode=MMA, reference='random'):
    """ Relative gap of the mean final objective of one association mode over another """
    by_value = {s.value: s for s in summaries}
    if mode not in by_value or reference not in by_value:
        return None
    return relative_gap(by_value[mode].objective, by_value[reference].objective)


def stability_check(num_instances, seed, max_mcs=8, max_miners=3):
    """ Run MMA on random small instances and cross-check with the exhaustive oracle
        @return list of (instance index, blocking pairs) of the unstable instances
    """
    failures = []
    for i in range(num_instances):
        mcs, miners, channels, sys = sample_small_instance(rng_streams.stream(seed, rng_streams.INSTANCES, i),
                                                           max_mcs, max_miners)
        try:
            prefs = build_preferences(mcs, miners, channels, sys, SELF_UTILITY)
        except MatchingError as e:
            _logger.debug('Instance %d skipped: %s', i, e.message)
            continue

        result = run_mma(prefs)
        blocking = find_blocking_pairs(result, prefs.economics)
        if blocking or not oracle_agrees(prefs, result):
            _logger.warning('Instance %d unstable, blocking pairs %s', i, blocking)
            failures.append((i, blocking))
    return failures

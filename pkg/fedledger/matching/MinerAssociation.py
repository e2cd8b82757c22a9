from .PreferenceTables import PreferenceTables

from dataclasses import dataclass, field
from typing import Dict, Optional, FrozenSet, Tuple, List, Set
import numpy as np
import logging

_logger = logging.getLogger(__name__)

# Tie-breaking rules among equal utilities
TIE_ASCENDING_ID = 'ascending_id'


@dataclass(frozen=True)
class MatchingCounters:
    """ Observed work of one association run """
    rounds: int = 0
    proposals: int = 0  # proposal events, re-proposals after a deferred rejection included
    distinct_proposals: int = 0  # distinct (MC, miner) pairs ever proposed, at most N.S
    comparisons: int = 0  # proposer comparisons made by miners while accepting

    def as_dict(self):
        return dict(rounds=self.rounds, proposals=self.proposals,
                    distinct_proposals=self.distinct_proposals, comparisons=self.comparisons)


@dataclass(frozen=True)
class AssociationResult:
    """ Mapping g from MCs to miners (None when unassociated), indicator pairs and participants """
    assignment: Dict[int, Optional[int]]
    indicator: FrozenSet[Tuple[int, int]]
    participants: FrozenSet[int]
    counters: MatchingCounters = MatchingCounters()
    mode: str = 'mma'

    @staticmethod
    def from_assignment(assignment, counters=MatchingCounters(), mode='mma'):
        indicator = frozenset((n, s) for n, s in assignment.items() if s is not None)
        return AssociationResult(assignment=dict(assignment), indicator=indicator,
                                 participants=frozenset(n for n, _ in indicator),
                                 counters=counters, mode=mode)

    def miner_load(self, miner_ids):
        """ Number of MCs associated with each miner """
        load = {s: 0 for s in miner_ids}
        for _, s in self.indicator:
            load[s] += 1
        return load

    def check(self, prefs: PreferenceTables):
        """ Assert the association invariants against the pair economics """
        for n, s in self.indicator:
            econ = prefs.economics[(n, s)]
            assert econ.feasible, 'Pair (%d, %d) misses the upload deadline' % (n, s)
            assert econ.miner_utility > 0, 'Pair (%d, %d) has a non-positive miner utility' % (n, s)
        assert self.participants == frozenset(n for n, s in self.assignment.items() if s is not None)


@dataclass
class MatchingState:
    """ Mutable state of the deferred acceptance rounds """
    remaining: Dict[int, List[int]]  # preference lists, permanent rejections removed
    waiting: Dict[int, List[int]] = field(default_factory=dict)  # W_s of the current round
    rejected_by_miner: Dict[int, Set[int]] = field(default_factory=dict)  # Rej_s
    rejected_by_mc: Dict[int, Set[int]] = field(default_factory=dict)  # Rej_n
    unmatched: Set[int] = field(default_factory=set)
    round: int = 0
    proposal_count: int = 0

    def new_round(self, miner_ids):
        self.round += 1
        self.waiting = {s: [] for s in miner_ids}
        self.rejected_by_miner = {s: set() for s in miner_ids}
        self.rejected_by_mc = {n: set() for n in self.unmatched}


def run_mma(prefs: PreferenceTables, tie_break=TIE_ASCENDING_ID, capacity=None) -> AssociationResult:
    """ Deferred acceptance association, each miner accepting its best proposer every round
        @param capacity maximum number of MCs per miner, None for no limit
    """

    if tie_break != TIE_ASCENDING_ID:
        raise ValueError("Unknown tie-break rule '%s'" % tie_break)

    miner_ids = prefs.miner_ids
    state = MatchingState(remaining={n: list(p) for n, p in prefs.mc_prefs.items()})
    state.unmatched = {n for n, p in state.remaining.items() if p}
    assignment = {n: None for n in prefs.mc_ids}
    accepted = {s: 0 for s in miner_ids}
    distinct = set()
    comparisons = 0

    while state.unmatched:
        state.new_round(miner_ids)

        # Every unmatched MC applies to its best remaining miner
        for n in sorted(state.unmatched):
            if not state.remaining[n]:
                continue
            s = state.remaining[n][0]
            state.waiting[s].append(n)
            state.proposal_count += 1
            distinct.add((n, s))

        if not any(state.waiting.values()):
            break

        rejected_any = False
        for s in miner_ids:
            applicants = state.waiting[s]
            if not applicants:
                continue

            if capacity is not None and accepted[s] >= capacity:
                # Full miner, final rejection
                for n in applicants:
                    state.remaining[n].remove(s)
                    state.rejected_by_miner[s].add(n)
                    state.rejected_by_mc[n].add(s)
                rejected_any = True
                continue

            # Preference lists are ranked with ties already broken by ascending id
            best = min(applicants, key=lambda n: prefs.miner_rank(s, n))
            comparisons += len(applicants) - 1

            assignment[best] = s
            accepted[s] += 1
            state.unmatched.discard(best)

            for n in applicants:
                if n != best:
                    state.rejected_by_miner[s].add(n)
                    state.rejected_by_mc[n].add(s)
                    rejected_any = True

        # MCs left without any candidate stay unassociated
        state.unmatched = {n for n in state.unmatched if state.remaining[n]}

        if not rejected_any:
            break

    counters = MatchingCounters(rounds=state.round, proposals=state.proposal_count,
                                distinct_proposals=len(distinct), comparisons=comparisons)
    result = AssociationResult.from_assignment(assignment, counters, mode='mma')
    result.check(prefs)

    _logger.info('MMA association: %d of %d MCs associated in %d rounds, %d proposals',
                 len(result.participants), len(assignment), counters.rounds, counters.proposals)
    return result


def complexity_counters(result: AssociationResult):
    """ Rounds, proposals and comparisons observed during run_mma """
    return result.counters.as_dict()


def random_association(prefs: PreferenceTables, rng: np.random.Generator) -> AssociationResult:
    """ Associate every MC with a uniformly drawn miner among its feasible candidates """
    assignment = {}
    for n in prefs.mc_ids:
        candidates = sorted(prefs.mc_prefs[n])
        assignment[n] = candidates[rng.integers(len(candidates))] if candidates else None

    result = AssociationResult.from_assignment(assignment, mode='random')
    result.check(prefs)

    _logger.info('Random association: %d of %d MCs associated', len(result.participants), len(assignment))
    return result

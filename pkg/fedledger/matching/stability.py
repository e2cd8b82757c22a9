#
# Blocking pairs and exhaustive stability oracle
#
# A pair (C_n, M_s) blocks an association when C_n is associated with another miner M_s*,
# the pair (n, s) could be associated and C_n gets a strictly larger MC utility with M_s.
#

from . import InstanceTooLarge
from .MinerAssociation import AssociationResult
from .PreferenceTables import PreferenceTables

import numpy as np

# Largest number of assignments the oracle accepts to enumerate
MAX_ENUMERATION = 1 << 20

UNASSOCIATED = -1


def find_blocking_pairs(result: AssociationResult, econ):
    """ All blocking pairs of an association, empty when the association is stable
        @param econ mapping (MC id, miner id) -> PairEconomics
    """
    miner_ids = sorted({s for _, s in econ})
    blocking = []
    for n, s_star in sorted(result.assignment.items()):
        if s_star is None:
            continue
        current = econ[(n, s_star)].mc_utility
        for s in miner_ids:
            if s != s_star and econ[(n, s)].acceptable and econ[(n, s)].mc_utility > current:
                blocking.append((n, s))
    return blocking


def is_stable(result: AssociationResult, econ):
    return not find_blocking_pairs(result, econ)


def enumerate_assignments(prefs: PreferenceTables):
    """ Every feasible assignment as rows of miner ids (UNASSOCIATED for none), MCs in id order """
    mc_ids = prefs.mc_ids
    choices = [[UNASSOCIATED] + sorted(prefs.mc_prefs[n]) for n in mc_ids]

    count = int(np.prod([len(c) for c in choices], dtype=float))
    if count > MAX_ENUMERATION:
        raise InstanceTooLarge('%d assignments to enumerate, limit is %d' % (count, MAX_ENUMERATION))

    grids = np.meshgrid(*[np.array(c) for c in choices], indexing='ij')
    return np.stack([g.ravel() for g in grids], axis=1)


def blocking_counts(prefs: PreferenceTables, assignments):
    """ Number of blocking pairs of each enumerated assignment, vectorized over the rows """
    mc_ids = prefs.mc_ids
    miner_ids = prefs.miner_ids
    miner_index = {s: j for j, s in enumerate(miner_ids)}

    # utility[n, s] for acceptable pairs, -inf otherwise
    utility = np.full((len(mc_ids), len(miner_ids)), -np.inf)
    for i, n in enumerate(mc_ids):
        for s in miner_ids:
            econ = prefs.economics[(n, s)]
            if econ.acceptable:
                utility[i, miner_index[s]] = econ.mc_utility

    assignments = np.asarray(assignments)
    matched = assignments != UNASSOCIATED
    columns = np.searchsorted(np.array(miner_ids), np.where(matched, assignments, miner_ids[0]))
    rows = np.arange(len(mc_ids))
    current = np.where(matched, utility[rows, columns], np.inf)

    # (assignment, MC, miner) strictly better alternatives, own miner excluded by strictness
    better = utility[None, :, :] > current[:, :, None]
    return better.sum(axis=(1, 2))


def stable_assignments(prefs: PreferenceTables):
    """ Exhaustive oracle: all feasible assignments without blocking pair """
    assignments = enumerate_assignments(prefs)
    return assignments[blocking_counts(prefs, assignments) == 0]


def oracle_agrees(prefs: PreferenceTables, result: AssociationResult):
    """ True when the association is among the stable assignments found by enumeration """
    row = np.array([UNASSOCIATED if result.assignment[n] is None else result.assignment[n] for n in prefs.mc_ids])
    stable = stable_assignments(prefs)
    return bool(np.any(np.all(stable == row[None, :], axis=1)))

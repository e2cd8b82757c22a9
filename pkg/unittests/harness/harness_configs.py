from fedledger.harness.ExperimentConfig import parse_config

import copy

# Small, fast experiment: every pair meets the deadline, light proof of work
SMALL_DOCUMENT = {
    'name': 'small',
    'seed': 7,
    'population': {'num_mcs': 4, 'num_miners': 2},
    'ranges': {'local_iters': [1, 2]},
    'system': {'global_iters': 3},
    'privacy': {'batch_size': 8, 'learning_rate': .1},
    'dataset': {'samples_per_mc': 24, 'feature_dim': 4, 'test_samples': 40},
    'ledger': {'difficulty': 2},
    'output': {'plots': False},
}


def small_document(**sections):
    """ Copy of the small document, the given sections merged into it """
    document = copy.deepcopy(SMALL_DOCUMENT)
    for key, value in sections.items():
        if isinstance(value, dict) and isinstance(document.get(key), dict):
            document[key].update(value)
        else:
            document[key] = value
    return document


def small_config(**sections):
    return parse_config(small_document(**sections))

#
# Seeded random streams, one independent stream per purpose and key
#

import numpy as np

# Stream purposes
POPULATION = 0
DATASET = 1
ASSOCIATION = 2
MODEL_INIT = 3
TRAINING = 4
MINING = 5
TEST_SET = 6
INSTANCES = 7


def stream(seed: int, purpose: int, *key: int) -> np.random.Generator:
    """ Independent generator for (seed, purpose, key...), identical whatever the call order """
    return np.random.default_rng(np.random.SeedSequence(int(seed), spawn_key=(int(purpose), *map(int, key))))

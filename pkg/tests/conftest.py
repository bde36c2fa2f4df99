"""Shared helpers: seeded RNG and random cycle factories."""

import math
import random

import pytest

from cyclesplines import EdgeLabeledCycle

SEED = 987654321


@pytest.fixture
def rng():
    return random.Random(SEED)


def random_cycle(rng, n_range=(3, 8), label_range=(1, 30)):
    n = rng.randint(*n_range)
    return EdgeLabeledCycle(tuple(rng.randint(*label_range) for _ in range(n)))


def random_king_cycle(rng, n_range=(3, 8), label_range=(1, 30)):
    # resample until the last two labels are coprime
    while True:
        cycle = random_cycle(rng, n_range, label_range)
        if math.gcd(cycle.label(cycle.n - 1), cycle.label(cycle.n)) == 1:
            return cycle

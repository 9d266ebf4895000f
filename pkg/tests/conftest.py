import random

import pytest

from separ.core import SubkeySet


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)


def random_subkeys(rng: random.Random, n: int = 1) -> SubkeySet:
    return SubkeySet.from_halves(n,
                                 rng.randrange(1 << 16), rng.randrange(1 << 16),
                                 rng.randrange(1 << 16), rng.randrange(1 << 16))

import random
import string

import pytest

from modmatroid.matroids import Realization, from_realization


def random_realization(rng: random.Random, max_dim=4, max_labels=6, max_entry=9,
                       n_labels=None) -> Realization:
    """A random integer vector configuration at desk scale."""
    n = rng.randint(1, max_dim)
    e = n_labels if n_labels is not None else rng.randint(1, max_labels)
    m = rng.randint(0, n)
    labels = tuple(string.ascii_lowercase[:e])
    relations = [[rng.randint(-max_entry, max_entry) for _ in range(m)]
                 for _ in range(n)]
    vectors = [[rng.randint(-max_entry, max_entry) for _ in range(e)]
               for _ in range(n)]
    return Realization(labels, relations, vectors)


@pytest.fixture(scope="session")
def rng():
    return random.Random(20260813)


@pytest.fixture(scope="session")
def small_suite():
    """Forty realized matroids used across the unit tests."""
    r = random.Random(11)
    out = []
    while len(out) < 40:
        real = random_realization(r, max_labels=5)
        out.append((real, from_realization(real)))
    return out

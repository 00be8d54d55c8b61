import random
import time
from fractions import Fraction

import pytest

from quatlie.quaternify import quaternify
from quatlie.scalars import GaussianRational, Quaternion

ACCEPTANCE_TYPES = (("A", 1), ("A", 2), ("A", 3), ("B", 2), ("C", 2), ("D", 3))

_BUILT = {}
BUILD_SECONDS = {}


def built_algebra(type_label, rank):
    key = (type_label, rank)
    if key not in _BUILT:
        t0 = time.monotonic()
        _BUILT[key] = quaternify(type_label, rank)
        BUILD_SECONDS[key] = time.monotonic() - t0
    return _BUILT[key]


@pytest.fixture(scope="session")
def algebras():
    """Builder accessor shared across the whole run; builds each type once."""
    return built_algebra


def rand_fraction(rng, span=4, max_den=3):
    return Fraction(rng.randint(-span, span), rng.randint(1, max_den))


def rand_gauss(rng):
    return GaussianRational(rand_fraction(rng), rand_fraction(rng))


def rand_quat(rng):
    return Quaternion(rand_gauss(rng), rand_gauss(rng))


def rand_qmatrix(rng, n, sparsity=0.5):
    from quatlie.matrices import QuatMatrix
    from quatlie.scalars import Q_ZERO

    rows = [
        [rand_quat(rng) if rng.random() > sparsity else Q_ZERO for _ in range(n)]
        for _ in range(n)
    ]
    return QuatMatrix(rows)


@pytest.fixture
def rng():
    return random.Random(987123)

import random

import pytest

from doublepoints.algebra.poly_core import PolyRing


def pytest_configure(config):
    config.addinivalue_line('markers', 'slow: long exact computations (sextic census, random corpora)')


@pytest.fixture
def rng():
    return random.Random(0)


@pytest.fixture
def plane():
    return PolyRing(('x', 'y', 'z'))


@pytest.fixture
def affine_plane():
    return PolyRing(('x', 'y'))

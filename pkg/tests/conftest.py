import numpy as np
import pytest

from minimal_schwarz import from_pq
from minimal_schwarz.catalog import get_surface


def random_coeffs(rng, degree):
    return rng.uniform(-1, 1, degree + 1) + 1j * rng.uniform(-1, 1, degree + 1)


def random_surface(rng, max_degree=6, min_degree=0):
    dp = int(rng.integers(min_degree, max_degree + 1))
    dq = int(rng.integers(min_degree, max_degree + 1))
    return from_pq(random_coeffs(rng, dp), random_coeffs(rng, dq))


def random_disk_points(rng, n, r_max=1.0):
    r = r_max * np.sqrt(rng.uniform(0, 1, n))
    return r * np.exp(2j * np.pi * rng.uniform(0, 1, n))


@pytest.fixture
def rng():
    return np.random.default_rng(20261018)


@pytest.fixture
def enneper():
    return get_surface("enneper")


@pytest.fixture
def planar():
    return get_surface("planar")

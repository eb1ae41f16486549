import numpy as np
import pytest
from hypothesis import HealthCheck, settings

import fracdecomp as fd

settings.register_profile(
    "ci",
    derandomize=True,
    max_examples=50,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("ci")


@pytest.fixture(scope="session")
def grid():
    """Default desk-scale grid: window [-20, 20), n = 4096, dx ~ 0.009766."""
    return fd.UniformGrid.from_window(-20.0, 20.0, 4096)


@pytest.fixture(scope="session")
def symmetric_grid():
    """Odd-n grid with points -20 .. +20 inclusive, symmetric about 0."""
    return fd.UniformGrid.symmetric(20.0, 4097)


@pytest.fixture(scope="session")
def gaussian(grid):
    return fd.corpus.sample(fd.corpus.Gaussian(), grid)


@pytest.fixture(scope="session")
def gaussian_derivative(grid):
    return fd.corpus.sample(fd.corpus.GaussianDerivative(), grid)


@pytest.fixture(scope="session")
def bump(grid):
    return fd.corpus.sample(fd.corpus.Bump(-1.0, 1.0), grid)


@pytest.fixture(scope="session")
def zero_mean_bump(bump):
    return fd.remove_mean(bump)


@pytest.fixture
def rng():
    return np.random.default_rng(1234)

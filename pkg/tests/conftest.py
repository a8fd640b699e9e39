import numpy as np
import pytest

from dnlslab import Grid, classify_params
from dnlslab.solitons import find_kappa0


@pytest.fixture(scope="session")
def grid_small():
    return Grid(512, 30.0)


@pytest.fixture(scope="session")
def grid_medium():
    return Grid(1024, 30.0)


@pytest.fixture(scope="session")
def grid_ref():
    # reference resolution used by most tolerance-pinned checks
    return Grid(2048, 30.0)


@pytest.fixture(scope="session")
def kappa0_b1():
    return find_kappa0(1.0)


@pytest.fixture(scope="session")
def deg_b1(kappa0_b1):
    # degenerate interior soliton parameters at b = 1
    return classify_params(1.0, 1.0, 2.0 * kappa0_b1)


@pytest.fixture()
def rng():
    return np.random.default_rng(20240817)

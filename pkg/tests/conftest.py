import os

import pytest

from nctorus.category import HolomorphicCategory, StdObject
from nctorus.config import RunConfig
from nctorus.sl2_arith import SL2Mat, TorusParams


@pytest.fixture(scope="session")
def tau():
    """Returns the default complex structure parameter"""
    return -1j


@pytest.fixture(scope="session")
def params(tau):
    """Returns TorusParams at theta = 0.2"""
    return TorusParams(0.2, tau)


@pytest.fixture(scope="session")
def category(params):
    """Returns the holomorphic category at theta = 0.2"""
    return HolomorphicCategory(params)


@pytest.fixture(scope="session")
def labels():
    """Returns the lower unipotent labels of degree 0 to 3"""
    return {
        "one": SL2Mat.identity(),
        "g1": SL2Mat(1, 0, 1, 1),
        "g2": SL2Mat(1, 0, 2, 1),
        "g3": SL2Mat(1, 0, 3, 1),
        "odd": SL2Mat(2, 1, -3, -1),
    }


@pytest.fixture(scope="session")
def chain(labels, params):
    """Returns three objects with positive Hom degrees between consecutive ones"""
    return tuple(
        StdObject(labels[name], params.theta) for name in ("one", "g1", "g2")
    )


@pytest.fixture(scope="session")
def config():
    """Returns the default run configuration"""
    return RunConfig()


@pytest.fixture(scope="session")
def fixtures_dir():
    """Returns the path to the fixtures directory"""
    fixture_dir = os.path.join(os.path.dirname(__file__), "fixtures")
    os.makedirs(fixture_dir, exist_ok=True)
    return fixture_dir

import numpy as np
import pytest

from algebra.field import build_field
from algebra.upoly import UPoly
from representation.garep import Representation
from services.fixture_service import FixtureService

FIXTURE_NAMES = ['casec_single', 'det4', 'e89', 'e89_wide', 'eg1', 'two_dim', 'unipotent3']


@pytest.fixture(scope='session')
def fixture_service():
    return FixtureService()


@pytest.fixture(scope='session')
def corpus(fixture_service):
    return {name: fixture_service.load(name) for name in FIXTURE_NAMES}


@pytest.fixture(scope='session')
def eg1(corpus):
    return corpus['eg1']


@pytest.fixture(scope='session')
def e89(corpus):
    return corpus['e89']


@pytest.fixture(scope='session')
def e89_wide(corpus):
    return corpus['e89_wide']


@pytest.fixture(scope='session')
def det4(corpus):
    return corpus['det4']


@pytest.fixture(scope='session')
def casec_single(corpus):
    return corpus['casec_single']


@pytest.fixture(scope='session')
def unipotent3(corpus):
    return corpus['unipotent3']


@pytest.fixture(scope='session')
def two_dim(corpus):
    return corpus['two_dim']


@pytest.fixture(scope='session')
def combine_rep():
    """p = 3, q31 = t^3, q42 = t^3 - t: pairs (x3, x1, t^3) and (x4, x2, t^3 - t)"""
    f3 = build_field(3)
    return Representation(f3, 4, {(3, 1): UPoly(f3, [0, 0, 0, 1]), (4, 2): UPoly(f3, [0, 2, 0, 1])}, 'combine')


@pytest.fixture(scope='session')
def split_rep():
    """p = 3, q31 = t, q32 = t^3, q41 = t^3, q42 = -t: linear pairs need a^2 = -1, so live over F_9"""
    f3 = build_field(3)
    return Representation(f3, 4, {(3, 1): UPoly(f3, [0, 1]), (3, 2): UPoly(f3, [0, 0, 0, 1]),
                                  (4, 1): UPoly(f3, [0, 0, 0, 1]), (4, 2): UPoly(f3, [0, 2])}, 'split')


@pytest.fixture(scope='session')
def f2():
    return build_field(2)


@pytest.fixture(scope='session')
def f3():
    return build_field(3)


@pytest.fixture(scope='session')
def f5():
    return build_field(5)


@pytest.fixture(scope='session')
def f9():
    return build_field(3, 2)


@pytest.fixture
def rng():
    return np.random.default_rng(0)

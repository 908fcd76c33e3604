"""Pytest fixtures for unit tests."""
import pytest

from src.twistdeform.algebra import GeneratorId, UEAElement, build_galilei, build_poincare
from src.twistdeform.series import LaurentSeries, Parameter


@pytest.fixture(scope="session")
def poincare():
    """The Poincare algebra in its PBW order P0..P3, M01..M23."""
    return build_poincare()


@pytest.fixture(scope="session")
def galilei():
    """The Galilei algebra in its PBW order Pi0..Pi3, K12..K23, V1..V3."""
    return build_galilei()


@pytest.fixture
def gen(poincare):
    """Build a Poincare generator element from a kind and indices, e.g. gen("M", 1, 2)."""
    def build(kind, *indices, order=4):
        return UEAElement.generator(poincare, kind, *indices, order=order)
    return build


@pytest.fixture
def gid():
    """Shorthand for generator ids: gid("M", 0, 3)."""
    def build(kind, *indices):
        return GeneratorId(kind, tuple(indices))
    return build


@pytest.fixture
def theta():
    """theta_kl as a series at the default order."""
    return LaurentSeries.parameter(Parameter.THETA_KL)

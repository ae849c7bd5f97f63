import pytest
from hypothesis import HealthCheck, settings

from anglekit.triangulation import build
from corpus import one_tet_closed, shipped

settings.register_profile(
    "suite", max_examples=25, deadline=None,
    suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("suite")


@pytest.fixture(scope="session")
def ex46():
    return shipped("example_4_6")


@pytest.fixture(scope="session")
def fig8():
    return shipped("fig8")


@pytest.fixture(scope="session")
def unglued():
    return build(1, [])


@pytest.fixture(scope="session")
def valid_corpus():
    return one_tet_closed(valid_only=True)


@pytest.fixture(scope="session")
def all_corpus():
    return one_tet_closed(valid_only=False)

import pytest
from hypothesis import HealthCheck, settings

# root-system fixtures are immutable interned objects, safe to share
# across generated examples
settings.register_profile(
    "suite", deadline=None, max_examples=60,
    suppress_health_check=[HealthCheck.function_scoped_fixture])
settings.load_profile("suite")

from lierep.rootsystem import build_root_system  # noqa: E402


@pytest.fixture(params=["A1", "A2", "B2", "G2"])
def rs(request):
    return build_root_system(request.param)


@pytest.fixture
def a1():
    return build_root_system("A1")


@pytest.fixture
def a2():
    return build_root_system("A2")


@pytest.fixture
def b2():
    return build_root_system("B2")


@pytest.fixture
def g2():
    return build_root_system("G2")

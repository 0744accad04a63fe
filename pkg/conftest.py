import pytest

from rootsystem import root_system


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long sweeps and the larger exceptional algebras")


@pytest.fixture
def g2():
    return root_system("G2")


@pytest.fixture
def b2():
    return root_system("B2")

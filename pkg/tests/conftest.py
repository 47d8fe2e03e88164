import pytest

from simplest_sextic.field import SexticField


@pytest.fixture(scope="session")
def K1():
    return SexticField(1)


@pytest.fixture(scope="session")
def Km1():
    return SexticField(-1)

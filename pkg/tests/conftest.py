import pytest

from brandt_nsr import build_nsr


@pytest.fixture(scope="session")
def tbl1():
    return build_nsr(1)


@pytest.fixture(scope="session")
def tbl2():
    return build_nsr(2)


@pytest.fixture(scope="session")
def tbl3():
    return build_nsr(3)

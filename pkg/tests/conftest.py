import pytest

from ainfcat.field import FieldSpec, GF, QQ
from ainfcat.fixtures import arrow_fixture, poly_fixture, quiver_massey_fixture


@pytest.fixture(scope="session")
def Q():
    return QQ


@pytest.fixture(scope="session")
def F5():
    return GF(5)


@pytest.fixture(scope="session")
def quiver(Q):
    return quiver_massey_fixture(Q)


@pytest.fixture(scope="session")
def quiver_f2():
    return quiver_massey_fixture(GF(2))


@pytest.fixture(scope="session")
def poly(Q):
    return poly_fixture(7, 3, Q)


@pytest.fixture(scope="session")
def arrow(Q):
    return arrow_fixture(4, Q)

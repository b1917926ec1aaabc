import pytest

from jonq.birational import RationalMapData, identity_map, verify_cremona
from jonq.implicitize import JonquieresData
from jonq.fixtures import load_fixture
from jonq.ring import VariableSet, parse_polynomial


@pytest.fixture(scope="session")
def R3():
    return VariableSet(["x0", "x1", "x2"])


@pytest.fixture(scope="session")
def Y3():
    return VariableSet(["y0", "y1", "y2"])


@pytest.fixture(scope="session")
def R4():
    return VariableSet(["x0", "x1", "x2", "x3"])


def p(ring, text):
    return parse_polynomial(text, ring)


@pytest.fixture(scope="session")
def involution(R3, Y3):
    fwd = RationalMapData(R3, Y3, (p(R3, "x1*x2"), p(R3, "x0*x2"), p(R3, "x0*x1")))
    inv = RationalMapData(Y3, R3, (p(Y3, "y1*y2"), p(Y3, "y0*y2"), p(Y3, "y0*y1")))
    return verify_cremona(fwd, inv)


@pytest.fixture(scope="session")
def identity2(R3, Y3):
    return identity_map(R3, Y3)


@pytest.fixture(scope="session")
def plane_instance(involution, R3):
    return JonquieresData.build(
        involution, p(R3, "x0 + x1 + x2"), p(R3, "x0^2*x1 - x2^3")
    )


@pytest.fixture(scope="session")
def nzd_instance(involution, R3):
    return JonquieresData.build(
        involution, p(R3, "x0 + 2*x1 + 3*x2"), p(R3, "x0^3 + x1^3 + x2^3")
    )


@pytest.fixture(scope="session")
def space_instance():
    return load_fixture("space").jonquieres()

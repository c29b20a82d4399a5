import pytest

from fjump.poly import PolynomialRing


@pytest.fixture
def xy5():
    return PolynomialRing(5, ["x", "y"])


def ring(p, names="x,y", order="grevlex"):
    return PolynomialRing(p, names.split(","), order)

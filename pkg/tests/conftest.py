import pytest

from pants_lab.hierarchy.geodesics import Universe
from pants_lab.surface.ball import universe_curves
from pants_lab.surface.curves import S05, S06


@pytest.fixture(scope="session")
def u05():
    return Universe(universe_curves(S05, 4))


@pytest.fixture(scope="session")
def u06():
    return Universe(universe_curves(S06, 4))

import random

import pytest

from quiver_rpp.arquiver import knit
from quiver_rpp.quiver import parse_quiver


@pytest.fixture
def rng():
    return random.Random(20240517)


@pytest.fixture(scope="session")
def a4_ar():
    return knit(parse_quiver("A4:1>2>3<4"))


@pytest.fixture(scope="session")
def line_a5_ar():
    return knit(parse_quiver("A5:1<2<3<4<5"))


@pytest.fixture(scope="session")
def bifurcated_a5_ar():
    return knit(parse_quiver("A5:1>2>3<4<5"))

import pytest

from incgen.poset import parse_poset, standard_poset
from incgen.rings import parse_ring


@pytest.fixture
def chain2():
    return standard_poset("chain", 2)


@pytest.fixture
def chain3():
    return standard_poset("chain", 3)


@pytest.fixture
def antichain2():
    return standard_poset("antichain", 2)


@pytest.fixture
def vposet():
    return parse_poset("n 3\nrel 1 3\nrel 2 3")


@pytest.fixture
def gf2():
    return parse_ring("GF(2)")

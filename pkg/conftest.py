import pytest

from enumeration import CatalogSpec, catalog
from fuzzy_core import ValueChain
from semigroup_core import validate


@pytest.fixture
def trivial():
    return validate([[0]])


@pytest.fixture
def lz2():
    return catalog(CatalogSpec('left_zero', (2,)))


@pytest.fixture
def rz2():
    return catalog(CatalogSpec('right_zero', (2,)))


@pytest.fixture
def null2():
    return catalog(CatalogSpec('null', (2,)))


@pytest.fixture
def z2():
    return catalog(CatalogSpec('cyclic_group', (2,)))


@pytest.fixture
def chain2():
    return catalog(CatalogSpec('chain_semilattice', (2,)))


@pytest.fixture
def rb22():
    return catalog(CatalogSpec('rectangular_band', (2, 2)))


@pytest.fixture
def k1():
    return ValueChain(1)


@pytest.fixture
def k2():
    return ValueChain(2)


@pytest.fixture
def k3():
    return ValueChain(3)

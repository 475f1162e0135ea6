from __future__ import annotations

import pytest

from clanorbits import FamilyA, FamilyC, FamilyD, build_poset


@pytest.fixture(scope="session")
def poset_a22():
    return build_poset(FamilyA(2, 2))


@pytest.fixture(scope="session")
def poset_a33():
    return build_poset(FamilyA(3, 3))


@pytest.fixture(scope="session")
def poset_c22():
    return build_poset(FamilyC(2, 2))


@pytest.fixture(scope="session")
def poset_d3():
    return build_poset(FamilyD(3))


@pytest.fixture(scope="session")
def poset_d4():
    return build_poset(FamilyD(4))


@pytest.fixture(scope="session")
def ambient_a44():
    return build_poset(FamilyA(4, 4))

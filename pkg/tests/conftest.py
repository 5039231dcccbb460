from __future__ import annotations

import pytest

from morsematch.complexes import build_boundary, build_simplex
from morsematch.morse import build_matching_complex


@pytest.fixture(scope="session")
def d2():
    return build_simplex(2)


@pytest.fixture(scope="session")
def bd2():
    return build_boundary(2)


@pytest.fixture(scope="session")
def d3():
    return build_simplex(3)


@pytest.fixture(scope="session")
def bd3():
    return build_boundary(3)


@pytest.fixture(scope="session")
def m_d3(d3):
    return build_matching_complex(d3, "M")


@pytest.fixture(scope="session")
def m_bd3(bd3):
    return build_matching_complex(bd3, "M")


@pytest.fixture(scope="session")
def mp_d3(d3):
    return build_matching_complex(d3, "MP")


@pytest.fixture(scope="session")
def mp_bd3(bd3):
    return build_matching_complex(bd3, "MP")


@pytest.fixture(scope="session")
def gm_d3(d3):
    return build_matching_complex(d3, "GM")


@pytest.fixture(scope="session")
def gm_bd3(bd3):
    return build_matching_complex(bd3, "GM")

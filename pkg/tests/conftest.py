import itertools

import pytest

from strandbox import build_type_C_algebra


@pytest.fixture
def a3():
    return build_type_C_algebra(3, "RR")


@pytest.fixture
def a4():
    return build_type_C_algebra(4, "RRR")


@pytest.fixture
def a4_rrl():
    return build_type_C_algebra(4, "RRL")


@pytest.fixture
def a5_rrlr():
    return build_type_C_algebra(5, "RRLR")


def all_orientations(n):
    return ["".join(bits) for bits in itertools.product("RL", repeat=n - 1)]

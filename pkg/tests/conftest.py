import random

import pytest

from ratdec.algebra import Poly, gf
from ratdec.rscode import rs_code


@pytest.fixture(scope="session")
def gf8():
    return gf(3)


@pytest.fixture(scope="session")
def gf16():
    return gf(4)


@pytest.fixture(scope="session")
def gf256():
    return gf(8)


@pytest.fixture(scope="session")
def rs7_3():
    return rs_code(3, 3)


@pytest.fixture(scope="session")
def rs15_9():
    return rs_code(4, 9)


def rand_poly(field, rng: random.Random, max_deg: int, nonzero: bool = False) -> Poly:
    while True:
        p = Poly(field, [rng.randrange(field.q) for _ in range(max_deg + 1)])
        if not nonzero or not p.is_zero:
            return p

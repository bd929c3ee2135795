import random
from fractions import Fraction

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from sp3geom.algebra import SymMat3
from sp3geom.sp3 import from_blocks

settings.register_profile("default", deadline=None, max_examples=40)
settings.load_profile("default")

small = st.integers(min_value=-9, max_value=9)
symmats = st.tuples(*[small] * 6).map(lambda e: SymMat3.from_entries(*e))
points14 = st.lists(st.integers(min_value=-5, max_value=5), min_size=14, max_size=14).filter(any)
seeds = st.integers(min_value=0, max_value=2**32 - 1)

Y0 = SymMat3.from_entries(0, 1, 0, 0, 0, 1)  # matrix of 2 y1 y2 + y3^2
ZERO3 = [[0] * 3 for _ in range(3)]


def canonical_covector(Y=Y0, z=0):
    return from_blocks(0, ZERO3, Y.full(), z)


def frac_vec(v):
    return [Fraction(x) for x in v]


@pytest.fixture
def rng():
    return random.Random(20261019)


# one line per acceptance criterion, printed at the end of the run
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)

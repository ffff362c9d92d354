import random

import pytest
from hypothesis import settings

from hirschkit.generators import random_hrep

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")


@pytest.fixture
def rng():
    return random.Random(12345)


def square_h():
    from hirschkit.generators import cube_h

    return cube_h(2)


def random_2d_systems(count, seed=0, n=6):
    return [random_hrep(2, n, seed + i) for i in range(count)]


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)

import random

import pytest

from theta2.fields import field_new
from theta2.funcfield import ratfunc_field


@pytest.fixture
def rng():
    return random.Random(20261016)


@pytest.fixture(scope="session")
def F2():
    return field_new(1)


@pytest.fixture(scope="session")
def F4():
    return field_new(2)


@pytest.fixture(scope="session")
def F8():
    return field_new(3)


@pytest.fixture(scope="session")
def K():
    return ratfunc_field(1)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(mod.LINES, key=lambda l: int(l.split()[1])):
        terminalreporter.write_line(line)

import sys
import random
from fractions import Fraction

import pytest

from ncqm import SectorLabel


@pytest.fixture
def rng():
    return random.Random(20261016)


@pytest.fixture
def label():
    """The worked-example sector (1, 1/2, 1/3), kappa = 5/6."""
    return SectorLabel(1, Fraction(1, 2), Fraction(1, 3))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.RESULTS:
        terminalreporter.write_line(line)

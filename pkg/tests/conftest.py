import random

import pytest

from trelliskit import fixtures


@pytest.fixture
def pentagon():
    return fixtures.pentagon()


@pytest.fixture
def hourglass():
    return fixtures.hourglass7()


@pytest.fixture
def rng():
    return random.Random(99)

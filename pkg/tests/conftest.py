import random

import pytest

from cuntzlab import AlgebraElement, EndomorphismSpec


@pytest.fixture
def rng():
    return random.Random(987123)


@pytest.fixture
def s1():
    return AlgebraElement.generator(2, 1)


@pytest.fixture
def s2():
    return AlgebraElement.generator(2, 2)


@pytest.fixture
def one():
    return AlgebraElement.one(2)


@pytest.fixture
def psi12():
    return EndomorphismSpec.from_label("(1 2)")

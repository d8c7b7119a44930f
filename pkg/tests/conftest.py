import random

import pytest

from msca.composition import compose
from msca.io import a1_operands, a2_operands, a2_orchestration_operands
from msca.models import Flavor
from msca.oracle import random_msca
from msca.synthesis import choreography, mpc, orchestration

CORPUS_SEEDS = range(500)


@pytest.fixture(scope="session")
def a1():
    return compose(a1_operands())


@pytest.fixture(scope="session")
def a2():
    return compose(a2_operands())


@pytest.fixture(scope="session")
def a2_orchestration():
    return compose(a2_orchestration_operands())


@pytest.fixture(scope="session")
def a1_orchestration(a1):
    return orchestration(a1)


@pytest.fixture(scope="session")
def a1_mpc(a1):
    return mpc(a1)


@pytest.fixture(scope="session")
def a2_choreography(a2):
    return choreography(a2)


@pytest.fixture(scope="session")
def orc_corpus():
    return [random_msca(random.Random(seed), Flavor.ORCHESTRATION) for seed in CORPUS_SEEDS]


@pytest.fixture(scope="session")
def chor_corpus():
    return [random_msca(random.Random(seed), Flavor.CHOREOGRAPHY) for seed in CORPUS_SEEDS]

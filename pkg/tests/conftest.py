import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from helpers import resolve_bases, signed
from smk.corpus import EXC_BASES, _e2_envelope, generate_corpus, resolve
from smk.groundset import GroundSet
from smk.matroid import Matroid, uniform
from smk.sympcore import RankedSympMatroid, uniform_symp


@pytest.fixture(scope="session")
def gs2():
    return GroundSet(2)


@pytest.fixture(scope="session")
def gs3():
    return GroundSet(3)


@pytest.fixture(scope="session")
def M1(gs2):
    """Envelope of S1."""
    return Matroid(4, signed(gs2, (1, -2), (-1, 2), (-1, -2), (1, -1), (2, -2)))


@pytest.fixture(scope="session")
def S1(gs2, M1):
    return RankedSympMatroid(gs2, M1)


@pytest.fixture(scope="session")
def EXC(gs2):
    return resolve_bases(2, EXC_BASES)


@pytest.fixture(scope="session")
def E2():
    return RankedSympMatroid(GroundSet(3), _e2_envelope())


@pytest.fixture(scope="session")
def U22():
    return uniform_symp(2, 2)


@pytest.fixture(scope="session")
def U23():
    return uniform_symp(2, 3)


@pytest.fixture(scope="session")
def U33():
    return uniform_symp(3, 3)


@pytest.fixture(scope="session")
def U24():
    return uniform(2, 4)


@pytest.fixture(scope="session")
def corpus3():
    return generate_corpus(3, seed=0)


@pytest.fixture(scope="session")
def resolved3(corpus3):
    return [(inst, resolve(inst)) for inst in corpus3]

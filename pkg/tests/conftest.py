import os

import numpy as np
import pytest
from hypothesis import settings

from wielandt.oracle import make_rng, random_pair
from wielandt.spectrum import GramPair, analyze, pair_from_matrix

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

DATA = os.path.join(os.path.dirname(__file__), os.pardir, "demos", "data")


@pytest.fixture
def fix_a():
    """G1 = I, G2 = diag(1, 4): m = 1, M = 2."""
    pair = GramPair(np.eye(2), np.diag([1.0, 4.0]))
    return pair, analyze(pair)


@pytest.fixture
def fix_b():
    """Pair induced by A = [[1, 1], [0, 1]]."""
    pair = pair_from_matrix(np.array([[1.0, 1.0], [0.0, 1.0]]))
    return pair, analyze(pair)


@pytest.fixture
def proportional():
    pair = GramPair(np.eye(2), 4.0 * np.eye(2))
    return pair, analyze(pair)


@pytest.fixture(params=[(3, False), (4, True), (8, True)], ids=["real3", "cplx4", "cplx8"])
def rand_pair(request):
    n, cplx = request.param
    pair = random_pair(make_rng(2024, n, int(cplx)), n, cplx)
    return pair, analyze(pair)


@pytest.fixture
def data_dir():
    return os.path.abspath(DATA)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

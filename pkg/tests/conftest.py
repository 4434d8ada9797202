import random

import pytest
from hypothesis import strategies as st

from gaugeca import kernels
from gaugeca.ca import Cell, FullState, MatterConfig
from gaugeca.gauge import GaugeField, GaugeTransform
from gaugeca.permutation import Perm

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(params=sorted(kernels.available_backends()))
def backend(request):
    return kernels.available_backends()[request.param]


@pytest.fixture
def rng():
    return random.Random(1234)


@st.composite
def perms(draw, K):
    return Perm(tuple(draw(st.permutations(range(K)))))


@st.composite
def configs(draw, max_L=6, max_K=4):
    """(L, K) followed by matter, field and transform on that ring."""
    L = draw(st.integers(1, max_L))
    K = draw(st.integers(1, max_K))
    color = st.integers(0, K - 1)
    psi = MatterConfig(tuple(Cell(draw(color), draw(color)) for _ in range(L)), K)
    field = GaugeField([draw(perms(K)) for _ in range(L)], K)
    g = GaugeTransform([draw(perms(K)) for _ in range(L)], K)
    return FullState(psi, field), g

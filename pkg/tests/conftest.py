import numpy as np
import pytest
from hypothesis import strategies as st

from lmvt import Instance

ACCEPTANCE_LINES = []


@st.composite
def small_instances(draw, max_n=3, max_B=5, max_rate=6):
    n = draw(st.integers(1, max_n))
    B = draw(st.integers(1, max_B))
    rates = draw(st.lists(
        st.lists(st.integers(0, max_rate), min_size=B, max_size=B),
        min_size=n, max_size=n))
    return Instance(rates)


@pytest.fixture
def toy():
    return Instance([[3, 1], [2, 2]])


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def record_criterion():
    def record(number, ok, detail):
        ACCEPTANCE_LINES.append(
            f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}")
    return record

from fractions import Fraction

import pytest
from hypothesis import strategies as st

from smallknots.rational import INF

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def fractions(max_value=10**6):
    return st.builds(
        Fraction,
        st.integers(-max_value, max_value),
        st.integers(1, max_value),
    )


def slopes(max_value=10**6):
    return st.one_of(fractions(max_value), st.just(INF))


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES

"""Shared hypothesis strategies and settings for the test suite."""

from __future__ import annotations

import hypothesis
from hypothesis import strategies as st

from lsb import Alphabet, Sequence

hypothesis.settings.register_profile("suite", deadline=None, max_examples=80)
hypothesis.settings.load_profile("suite")

#: One verdict line per end-to-end gate, echoed after the run so they stay
#: visible under output capture.
GATE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if GATE_LINES:
        terminalreporter.section("acceptance gates")
        for line in GATE_LINES:
            terminalreporter.write_line(line)


def rank_tuples(n: int, m: int) -> st.SearchStrategy[tuple[int, ...]]:
    return st.tuples(*[st.integers(0, m - 1)] * n)


@st.composite
def spaced_pair(draw, n_max: int = 5, m_max: int = 4):
    """Two equal-length rank tuples plus their (n, m)."""
    n = draw(st.integers(1, n_max))
    m = draw(st.integers(2, m_max))
    a = draw(rank_tuples(n, m))
    b = draw(rank_tuples(n, m))
    return a, b, n, m


@st.composite
def sequence_pair(draw, n_max: int = 5, m_max: int = 4):
    """Two equal-length Sequence objects over a shared alphabet."""
    a, b, n, m = draw(spaced_pair(n_max, m_max))
    alphabet = Alphabet.of_size(m)
    return Sequence(a, alphabet), Sequence(b, alphabet)

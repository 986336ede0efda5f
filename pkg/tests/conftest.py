from __future__ import annotations

import pytest
from hypothesis import strategies as st

from inhnet import corpus
from inhnet.diagram import NEG, POS, Arrow, build_diagram

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def nets():
    return corpus.load_all()


@pytest.fixture
def tweety(nets):
    return nets["tweety"]


@pytest.fixture
def nixon(nets):
    return nets["nixon"]


@st.composite
def dags(draw, max_nodes: int = 6, max_arrows: int = 10):
    """Small random nets: arrows only go forward in a drawn node order."""
    n = draw(st.integers(2, max_nodes))
    names = draw(st.permutations("abcdefgh"[:n]))
    pairs = [(names[i], names[j]) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=min(max_arrows, len(pairs))))
    signs = draw(st.lists(st.booleans(), min_size=len(chosen), max_size=len(chosen)))
    arrows = [Arrow(s, t, NEG if neg else POS) for (s, t), neg in zip(chosen, signs)]
    return build_diagram(arrows, nodes=names)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

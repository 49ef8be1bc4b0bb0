import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from chainasl.poset import BUILTIN_POSETS, Poset, all_small_posets, posets_from_relation


@pytest.fixture(scope="session")
def small_posets():
    return all_small_posets(4)


@pytest.fixture
def fig1():
    return BUILTIN_POSETS["fig1"]


@pytest.fixture
def fig2():
    return BUILTIN_POSETS["fig2"]


@pytest.fixture
def fig3():
    return BUILTIN_POSETS["fig3"]


@st.composite
def posets(draw, max_d=6):
    """Random labeled posets: a random DAG on a shuffled order, then closed."""
    d = draw(st.integers(1, max_d))
    order = draw(st.permutations(range(1, d + 1)))
    edges = set()
    for a in range(d):
        for b in range(a + 1, d):
            if draw(st.booleans()):
                edges.add((order[a], order[b]))
    rel = set(edges)
    changed = True
    while changed:
        changed = False
        for i, j in list(rel):
            for j2, k in list(rel):
                if j == j2 and (i, k) not in rel:
                    rel.add((i, k))
                    changed = True
    return posets_from_relation(d, rel)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

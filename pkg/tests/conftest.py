from itertools import combinations

import pytest
from hypothesis import strategies as st

from walkpowers.generators import complete_graph, cycle_graph, path_graph, star_graph
from walkpowers.graph import Graph


@pytest.fixture
def p3():
    return path_graph(3)


@pytest.fixture
def k13():
    return star_graph(4)


@pytest.fixture
def c4():
    return cycle_graph(4)


@pytest.fixture
def k3():
    return complete_graph(3)


@pytest.fixture
def two_edges():
    return Graph.from_edges(4, [(0, 1), (2, 3)])


@st.composite
def graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, mask) if keep])


def pytest_terminal_summary(terminalreporter):
    from tests import test_acceptance

    if test_acceptance.ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

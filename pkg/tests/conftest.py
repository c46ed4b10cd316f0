import random
from itertools import combinations, permutations

import pytest
from hypothesis import strategies as st

from kpath.graph import Graph
from kpath.generators import complete_graph, path_graph


def brute_path_sequences(g, k):
    """All simple k-vertex paths as vertex sequences, by permutation filtering."""
    return [
        p for p in permutations(range(g.n), k)
        if all(g.has_arc(a, b) for a, b in zip(p, p[1:]))
    ]


def brute_path_count(g, k):
    seqs = brute_path_sequences(g, k)
    if g.directed or k == 1:
        return len(seqs)
    return len(seqs) // 2


@st.composite
def small_graphs(draw, max_n=6, directed=None):
    n = draw(st.integers(0, max_n))
    is_directed = draw(st.booleans()) if directed is None else directed
    if is_directed:
        pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    else:
        pairs = list(combinations(range(n), 2))
    chosen = [p for p in pairs if draw(st.booleans())]
    return Graph.from_edges(n, chosen, is_directed)


@pytest.fixture
def k3():
    return complete_graph(3)


@pytest.fixture
def k4():
    return complete_graph(4)


@pytest.fixture
def p4():
    return path_graph(4)


@pytest.fixture
def rng():
    return random.Random(12345)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

from itertools import combinations

import pytest

from cgraph import SimpleGraph


def complete_graph(n):
    return SimpleGraph(n, list(combinations(range(n), 2)))


def complete_bipartite_graph(m, n):
    return SimpleGraph(m + n, [(i, m + j) for i in range(m) for j in range(n)])


@pytest.fixture
def k5():
    return complete_graph(5)

import pytest

from vnum.graphs import SimpleGraph, build_graph, graph_from_intervals

#: spine of the 27-vertex one-vertex-overlap example
SPINE_27 = [1, 3, 6, 7, 9, 12, 13, 15, 18, 19, 21, 22, 24, 26, 27]

#: maximal cliques of the 42-vertex closed (two-vertex-overlap) example
CLIQUES_42 = [
    (1, 4), (3, 9), (6, 10), (9, 13), (12, 16), (15, 19), (18, 21), (20, 23),
    (21, 24), (22, 25), (23, 28), (27, 30), (29, 34), (33, 37), (36, 40), (39, 42),
]

#: the worked cut set of the 42-vertex example
T_42 = [3, 4, 9, 10, 12, 13, 15, 16, 29, 30, 33, 34]


@pytest.fixture(scope="session")
def g27() -> SimpleGraph:
    iv = [(SPINE_27[i], SPINE_27[i + 1]) for i in range(len(SPINE_27) - 1)]
    return graph_from_intervals(27, iv)


@pytest.fixture(scope="session")
def g42() -> SimpleGraph:
    return graph_from_intervals(42, CLIQUES_42)


@pytest.fixture(scope="session")
def c4() -> SimpleGraph:
    return build_graph(4, [(1, 2), (2, 3), (3, 4), (1, 4)])


@pytest.fixture(scope="session")
def c5() -> SimpleGraph:
    return build_graph(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)])

import pytest

from hopbound import kernels
from hopbound.graph import Graph, HopInstance


@pytest.fixture
def single_edge():
    return HopInstance(Graph.from_edges(2, [(0, 1, 5)]), 0, 1, 1)


@pytest.fixture
def three_node():
    # s=0, a=1, t=2: s-a (1), a-t (1), s-t (3)
    return HopInstance(Graph.from_edges(3, [(0, 1, 1), (1, 2, 1), (0, 2, 3)]), 0, 2, 2)


@pytest.fixture(params=kernels.available_backends())
def backend(request):
    return request.param


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)

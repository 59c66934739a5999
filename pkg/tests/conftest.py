import random

import pytest

from minsep.graph import graph_from_edge_mask

_criteria = {}


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, text = marker.args
    key = (number, text)
    failed = call.excinfo is not None and call.when in ("setup", "call")
    if call.when == "call" or failed:
        _criteria[key] = _criteria.get(key, True) and not failed


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for (number, text), ok in sorted(_criteria.items()):
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {text}")


def random_graph(rng: random.Random, n: int, p: float = 0.5):
    pairs = n * (n - 1) // 2
    mask = sum(1 << i for i in range(pairs) if rng.random() < p)
    return graph_from_edge_mask(n, mask)


@pytest.fixture
def rng():
    return random.Random(20150101)

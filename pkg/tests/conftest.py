import pytest

from paramcodes import GF, cycle_graph, enumerate_points

_acceptance_lines = []


@pytest.fixture
def criterion():
    """Record a one-line pass/fail verdict for an acceptance criterion."""
    def record(label, ok, detail=""):
        _acceptance_lines.append(f"[{'PASS' if ok else 'FAIL'}] {label}" + (f"  ({detail})" if detail else ""))
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def cycle_set():
    cache = {}

    def get(k, q):
        if (k, q) not in cache:
            cache[k, q] = enumerate_points(cycle_graph(2 * k), GF(q))
        return cache[k, q]
    return get

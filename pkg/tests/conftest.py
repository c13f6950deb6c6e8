from __future__ import annotations

from itertools import combinations

import pytest

from kended.graph import FamilySpec, Graph, build_family, enumerate_labeled_connected

# (criterion, passed, detail) lines collected by the acceptance module
ACCEPTANCE_LINES: list[tuple[int, bool, str]] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for num, ok, detail in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {num}: {detail}")


@pytest.fixture(scope="session")
def corpus_upto5() -> list[Graph]:
    return [g for n in range(1, 6) for g in enumerate_labeled_connected(n)]


@pytest.fixture(scope="session")
def g1_22() -> Graph:
    return build_family(FamilySpec("g1", (2, 2)))


def graph_from_pairs(n: int, mask: int) -> Graph:
    pairs = list(combinations(range(n), 2))
    return Graph.from_edges(n, [e for i, e in enumerate(pairs) if mask >> i & 1])

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from locdim.graph import complete, cycle, from_edge_list, join, path  # noqa: E402

BOWTIE_EDGES = [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]
TRIANGLE_CHAIN_EDGES = [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4), (4, 5), (5, 6), (4, 6)]


@pytest.fixture
def bowtie():
    return from_edge_list(5, BOWTIE_EDGES)


@pytest.fixture
def triangle_chain():
    return from_edge_list(7, TRIANGLE_CHAIN_EDGES)


def k4_plus():
    """K_4 plus a vertex adjacent to exactly three of its vertices."""
    return from_edge_list(5, complete(4).edges() + [(4, 0), (4, 1), (4, 2)])


def apex_two_cliques():
    """<v> + (K_2 u K_2) with v at index 0."""
    return from_edge_list(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (3, 4)])


def fan5():
    """K_1 + P_5: a block where some minimal generator is not minimum."""
    return join(complete(1), path(5))


# Criterion verdicts recorded by test_acceptance, echoed after the run.
ACCEPTANCE: dict[int, str] = {}


def record_criterion(number: int, ok: bool, detail: str) -> None:
    line = f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE[number] = line
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for number in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[number])

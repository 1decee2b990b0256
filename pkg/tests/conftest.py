from pathlib import Path

import pytest

from supergame import StageGame

DATA = Path(__file__).parent / "data"

# One line per acceptance criterion, filled in by test_acceptance.py.
ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def example1():
    return StageGame.from_rows([6, 3, 1], [7, 5, 4])


@pytest.fixture
def example2():
    return StageGame.from_rows([6, 3, 1], [7, 5, "3/2"])


@pytest.fixture
def data_dir():
    return DATA


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

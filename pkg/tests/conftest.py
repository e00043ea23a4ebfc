import pytest

from orjsj.parsing import parse_relator
from orjsj.words import CyclicWord

ACCEPTANCE_LINES = []


@pytest.fixture
def W():
    return parse_relator


@pytest.fixture
def C():
    return lambda text: CyclicWord.of(parse_relator(text))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)

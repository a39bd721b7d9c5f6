from __future__ import annotations

import pytest

from helpers import ACCEPTANCE_LINES, load_fixture


@pytest.fixture
def example1():
    return load_fixture("example1.quiver")


@pytest.fixture
def example2():
    return load_fixture("example2.quiver")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

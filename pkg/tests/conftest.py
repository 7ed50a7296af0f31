from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

# one line per acceptance criterion, filled by test_acceptance
ACCEPTANCE_LINES: list = []


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long-running property or acceptance check")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def b1():
    from sinecert.interval import beta1
    return beta1(128)

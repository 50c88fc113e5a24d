from pathlib import Path

import pytest

GOLDEN = Path(__file__).parent / "golden"

ACCEPTANCE_LINES: list[str] = []


def load_golden(name: str) -> list[list[int]]:
    text = (GOLDEN / name).read_text()
    return [[int(tok) for tok in line.split()] for line in text.splitlines() if line.strip()]


@pytest.fixture
def golden():
    return load_golden


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

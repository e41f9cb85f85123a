import pytest
from hypothesis import settings

settings.register_profile("rsdh", derandomize=True, deadline=None, database=None, max_examples=200)
settings.load_profile("rsdh")

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES

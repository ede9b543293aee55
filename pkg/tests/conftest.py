import pytest

from mementoscope.archives import default_archives

# Verdict lines collected by the acceptance tests; printed after the run
# so they survive output capture.
acceptance_lines: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in acceptance_lines:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def archives():
    return default_archives()

import pytest

from hexpoly import enumerator


@pytest.fixture(scope="session")
def table12():
    """Level histogram of every polyomino up to area 12."""
    return enumerator.tally_levels(12)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)

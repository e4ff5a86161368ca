import pytest

from frigerio_tv.numerics import PrecisionContext


@pytest.fixture(scope="session")
def ctx():
    return PrecisionContext(256)


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(test_acceptance.RESULTS, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)

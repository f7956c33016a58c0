import pytest
from hypothesis import HealthCheck, settings

from convexham import generators

settings.register_profile(
    "suite",
    deadline=None,
    max_examples=30,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("suite")

# One line per acceptance criterion, printed after the run.
ACCEPTANCE_LINES = []


def record_criterion(line):
    ACCEPTANCE_LINES.append(line)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def conv6():
    return generators.convex_position(6)


@pytest.fixture(scope="session")
def conv8():
    return generators.convex_position(8)


@pytest.fixture(scope="session")
def rand8():
    return generators.random_geometric(8, 3)


@pytest.fixture(scope="session")
def rand9():
    return generators.random_geometric(9, 7)

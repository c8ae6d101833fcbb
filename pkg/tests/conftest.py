import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from exactef import config, fixtures  # noqa: E402

ACCEPTANCE_LINES = []


@pytest.fixture(autouse=True)
def _verification_mode():
    with config.override(verify=True):
        yield


@pytest.fixture(scope="session")
def X_v():
    return fixtures.load("example1_X_vrep")


@pytest.fixture(scope="session")
def X_h():
    return fixtures.load("example1_X_hrep_eq10")


@pytest.fixture(scope="session")
def U():
    return fixtures.load("example1_U")


@pytest.fixture(scope="session")
def map_A():
    return fixtures.load("example1_mapA")


@pytest.fixture(scope="session")
def reduction_instance():
    return fixtures.load("example1_reduction")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

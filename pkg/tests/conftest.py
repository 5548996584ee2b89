import pathlib
import sys

import pytest

sys.path.insert(0, str(pathlib.Path(__file__).parent))

from corpus import agent_theory, review_wadf, vee_lattice, vee_poset  # noqa: E402

DATA = pathlib.Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def fig():
    return vee_poset()


@pytest.fixture(scope="session")
def fig_lattice():
    return vee_lattice()


@pytest.fixture(scope="session")
def theory():
    return agent_theory()


@pytest.fixture(scope="session")
def wadf():
    return review_wadf()


@pytest.fixture(scope="session")
def data_dir():
    return DATA


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

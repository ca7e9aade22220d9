import pytest

from nail.engine import bundled_game
from nail.lm import default_lm
from nail.validity import default_model


@pytest.fixture(scope="session")
def validity_model():
    return default_model()


@pytest.fixture(scope="session")
def lm_model():
    return default_lm()


@pytest.fixture
def minizork():
    return bundled_game("minizork")


@pytest.fixture
def hitchhiker():
    return bundled_game("hitchhiker")


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)

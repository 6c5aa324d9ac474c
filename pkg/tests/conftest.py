import pytest

from spjacquet import gl_label, sp_label

# Lines printed by the acceptance module, one per criterion.
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def rho():
    return gl_label("rho", 1)


@pytest.fixture
def rho_sd():
    return gl_label("rho", 1, self_dual=True)


@pytest.fixture
def rho1():
    return gl_label("rho1", 1)


@pytest.fixture
def rho2():
    return gl_label("rho2", 1)


@pytest.fixture
def sigma():
    return sp_label("sigma", 1)


@pytest.fixture(scope="session")
def acceptance_log():
    return ACCEPTANCE_LINES

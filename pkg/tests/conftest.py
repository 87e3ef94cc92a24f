import pytest


@pytest.fixture(scope="session")
def pari():
    """PARI/GP through cypari2, used only as an independent oracle."""
    cypari2 = pytest.importorskip("cypari2")
    return cypari2.Pari()


def pari_root_number(pari, ainvs):
    return int(pari.ellrootno(pari.ellinit(list(ainvs))))


def pytest_terminal_summary(terminalreporter):
    from tests import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)

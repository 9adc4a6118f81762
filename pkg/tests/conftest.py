import pytest

from gccodes.cyclotomic import orbit_table, quadratic_residues


@pytest.fixture
def qr13():
    return orbit_table(13, 2, 2).block(quadratic_residues(13))


@pytest.fixture
def b17():
    return orbit_table(17, 2, 2).block([2, 8, 9, 15])


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for num in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[num])

import pytest

from surfgrids import fixtures


@pytest.fixture(params=sorted(fixtures.MAPS))
def fixture_map(request):
    return fixtures.MAPS[request.param]()


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])

import pytest
from hypothesis import HealthCheck, settings

from zariski.data import combination_points, load_curve

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture(scope="session")
def paper_curve():
    return load_curve("paper-Q")


@pytest.fixture(scope="session")
def curve(paper_curve):
    return paper_curve[0]


@pytest.fixture(scope="session")
def points(paper_curve):
    return paper_curve[1]


@pytest.fixture(scope="session")
def qpoints():
    return combination_points("paper-Q")


_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion checked by the test")


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is not None:
            _CRITERIA[item.nodeid] = [mark.args[0], mark.args[1], "NOT RUN"]


def pytest_runtest_logreport(report):
    entry = _CRITERIA.get(report.nodeid)
    if entry is None:
        return
    if report.when == "call" or report.outcome != "passed":
        entry[2] = "PASS" if report.outcome == "passed" else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n, title, verdict in sorted(_CRITERIA.values()):
        terminalreporter.write_line(f"criterion {n}: {verdict}  {title}")

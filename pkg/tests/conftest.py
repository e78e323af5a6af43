import pytest

from smoothgraph.survey import connected_graphs

_ACCEPTANCE: dict[int, dict] = {}


@pytest.fixture(scope="session")
def connected_upto6():
    return connected_graphs(6)


@pytest.fixture(scope="session")
def connected_upto7():
    return connected_graphs(7)


@pytest.fixture(scope="session")
def connected_upto8():
    return connected_graphs(8)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    number, title = marker.args
    entry = _ACCEPTANCE.setdefault(number, {"title": title, "passed": True, "seconds": 0.0})
    if report.when == "call":
        entry["seconds"] += report.duration
    if report.failed:
        entry["passed"] = False


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        e = _ACCEPTANCE[number]
        status = "PASS" if e["passed"] else "FAIL"
        terminalreporter.write_line(f"[{status}] {number:2d}. {e['title']} ({e['seconds']:.1f}s)")

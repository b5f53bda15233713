import pytest

# criterion number -> (passed, title); filled by test_acceptance.py
ACCEPTANCE = {}


@pytest.fixture
def criterion(request):
    """Record the verdict of one acceptance criterion for the terminal summary."""
    marker = request.node.get_closest_marker("criterion")
    number, title = marker.args
    ACCEPTANCE[number] = (False, title)
    yield
    report = getattr(request.node, "call_report", None)
    ACCEPTANCE[number] = (bool(report and report.passed), title)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when == "call":
        item.call_report = report


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        passed, title = ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number:>2}: {'PASS' if passed else 'FAIL'}  {title}")

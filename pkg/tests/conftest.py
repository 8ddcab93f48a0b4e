import pytest

CRITERIA_LINES = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


@pytest.fixture
def criterion(request):
    """Yield a dict for detail text; log PASS/FAIL for the test after it runs."""
    info = {"detail": ""}
    yield info
    rep = getattr(request.node, "rep_call", None)
    ok = rep is not None and rep.passed
    name = request.node.name.replace("test_", "", 1)
    CRITERIA_LINES.append(f"{'PASS' if ok else 'FAIL'}  {name}  {info['detail']}".rstrip())


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in CRITERIA_LINES:
        terminalreporter.write_line(line)

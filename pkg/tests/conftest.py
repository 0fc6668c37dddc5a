import pytest

_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, label): acceptance criterion number and short label")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when not in ("setup", "call"):
        return
    n, label = mark.args
    if rep.when == "setup" and rep.passed:
        return
    if hasattr(rep, "wasxfail") or rep.failed or rep.skipped:
        status = "FAIL"
    else:
        status = "PASS"
    _CRITERIA[n] = (label, status, getattr(rep, "wasxfail", ""))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        label, status, note = _CRITERIA[n]
        extra = f"  (expected failure: {note})" if note else ""
        terminalreporter.write_line(f"criterion {n:2d} {status}: {label}{extra}")

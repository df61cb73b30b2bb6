import pytest

_results = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call" and report.passed:
        return
    number, title = marker.args
    ok = report.passed and _results.get(number, True)
    _results[number] = ok
    _results.setdefault(("title", number), title)


def pytest_terminal_summary(terminalreporter):
    numbers = sorted(k for k in _results if isinstance(k, int))
    if not numbers:
        return
    terminalreporter.section("acceptance criteria")
    for n in numbers:
        status = "PASS" if _results[n] else "FAIL"
        terminalreporter.write_line(f"criterion {n:>2}: {status}  {_results[('title', n)]}")

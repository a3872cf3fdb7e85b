import pytest

_criteria: list[tuple[str, str, float]] = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    failed_early = report.when == "setup" and not report.passed
    if report.when == "call" or failed_early:
        verdict = "PASS" if report.passed else "FAIL"
        _criteria.append((verdict, marker.args[0], report.duration))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for verdict, title, seconds in _criteria:
        terminalreporter.write_line(f"{verdict}  {title}  ({seconds:.2f} s)")

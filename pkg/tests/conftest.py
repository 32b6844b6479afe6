from __future__ import annotations

import pytest

_CRITERIA: dict[int, list[tuple[str, str]]] = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    number = getattr(report, "criterion", None)
    if number is not None:
        _CRITERIA.setdefault(number, []).append((report.nodeid, report.outcome))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        outcome.get_result().criterion = marker.args[0]


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        results = _CRITERIA[number]
        failed = [nodeid for nodeid, outcome in results if outcome != "passed"]
        status = "PASS" if not failed else "FAIL"
        terminalreporter.write_line(f"criterion {number}: {status} ({len(results) - len(failed)}/{len(results)} tests)")
        for nodeid in failed:
            terminalreporter.write_line(f"    failed: {nodeid}")

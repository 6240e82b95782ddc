import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_acceptance = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if item.path.name != "test_acceptance.py":
        return
    label = (item.function.__doc__ or item.name).strip().splitlines()[0]
    if report.failed or (report.when == "call" and item.nodeid not in _acceptance):
        status = "PASS" if report.passed else "FAIL"
        _acceptance[item.nodeid] = (label, status, call.duration)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for label, status, secs in _acceptance.values():
        terminalreporter.write_line(f"{status}  {label}  ({secs:.2f}s)")

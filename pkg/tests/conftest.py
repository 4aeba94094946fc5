import re

import pytest

_acceptance = []


def pytest_runtest_logreport(report):
    if report.when != "call" or "test_acceptance.py" not in report.nodeid:
        return
    m = re.search(r"::test_(P\d+)_(\w+)", report.nodeid)
    if m:
        _acceptance.append((m.group(1), m.group(2).replace("_", " "), report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for crit, name, outcome in _acceptance:
        mark = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line("%-4s %s  %s" % (crit, mark, name))


@pytest.fixture
def ser():
    from centralriordan.exprlang import evaluate
    return evaluate

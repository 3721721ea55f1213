import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

_results = []


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        notes = "; ".join(f"{k}={v}" for k, v in report.user_properties)
        _results.append((report.nodeid.split("::")[-1], report.outcome, notes))


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome, notes in _results:
        mark = "PASS" if outcome == "passed" else "FAIL"
        line = f"[{mark}] {name}"
        if notes:
            line += f"  ({notes})"
        terminalreporter.write_line(line)

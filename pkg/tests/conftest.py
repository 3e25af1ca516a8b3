import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

_criteria = {}


def pytest_runtest_logreport(report):
    if report.when != "call" or "test_acceptance.py" not in report.nodeid:
        return
    for name, value in report.user_properties:
        if name == "criterion":
            _criteria[value] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_criteria, key=lambda s: int(s.split(".")[0])):
        outcome = "PASS" if _criteria[key] == "passed" else "FAIL"
        terminalreporter.write_line(f"{outcome}  criterion {key}")

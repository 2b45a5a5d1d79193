import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

ACCEPTANCE_RESULTS: dict[str, tuple[str, str]] = {}


def pytest_runtest_logreport(report):
    criterion = getattr(report, "criterion", None)
    for key, value in report.user_properties:
        if key == "criterion":
            criterion = value
    if criterion is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        if report.passed and not hasattr(report, "wasxfail"):
            status = "PASS"
        else:
            status = "FAIL"
        title = dict(report.user_properties).get("title", "")
        if hasattr(report, "wasxfail"):
            title = f"{title} [expected failure: {report.wasxfail.removeprefix('reason: ')}]"
        prev = ACCEPTANCE_RESULTS.get(criterion)
        if prev is None or prev[0] == "PASS":
            ACCEPTANCE_RESULTS[criterion] = (status, title)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS, key=lambda k: (int(k.split(".")[0]), k)):
        status, title = ACCEPTANCE_RESULTS[key]
        terminalreporter.write_line(f"{status}  criterion {key}: {title}")

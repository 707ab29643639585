"""Shared pytest hooks: a one-line PASS/FAIL digest for the acceptance
suite at the end of the run."""

_acceptance: dict[str, bool] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if report.when == "call":
        _acceptance[name] = report.passed
    elif report.failed:
        # setup/teardown crash counts as a failed criterion
        _acceptance[name] = False


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_acceptance):
        verdict = "PASS" if _acceptance[name] else "FAIL"
        terminalreporter.write_line(f"[acceptance] {name}: {verdict}")

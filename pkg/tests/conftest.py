ACCEPTANCE_FILE = "test_acceptance.py"

_outcomes = {}


def pytest_runtest_logreport(report):
    if ACCEPTANCE_FILE not in report.nodeid:
        return
    if report.when == "call" or report.outcome == "failed":
        name = report.nodeid.split("::")[-1]
        prev = _outcomes.get(name)
        if prev != "FAIL":
            _outcomes[name] = "PASS" if report.passed else "FAIL"
        _outcomes.setdefault(name + ":t", report.duration)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(k for k in _outcomes if not k.endswith(":t")):
        label = name.removeprefix("test_criterion_")
        terminalreporter.write_line(f"{_outcomes[name]}  criterion {label}  ({_outcomes[name + ':t']:.2f}s)")

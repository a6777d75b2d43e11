"""Prints one PASS/FAIL line per acceptance criterion after the run."""
import pytest

_outcomes: dict[str, str] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if item.module.__name__.endswith("test_acceptance") and (report.when == "call" or report.failed):
        _outcomes[item.name] = "FAIL" if report.failed else "PASS"


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    from test_acceptance import CRITERIA

    terminalreporter.section("acceptance criteria")
    for name, title in CRITERIA.items():
        if name in _outcomes:
            number = int(name.split("_")[2])
            terminalreporter.write_line(f"criterion {number:2d} {_outcomes[name]}: {title}")

import sys
from pathlib import Path

import pytest

# the oracle module lives beside the tests
sys.path.insert(0, str(Path(__file__).parent))

_acceptance: dict[int, tuple[str, str, float]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): one acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None or report.when != "call":
        return
    number, title = marker.args
    _acceptance[number] = (title, "PASS" if report.passed else "FAIL", report.duration)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_acceptance):
        title, status, seconds = _acceptance[number]
        terminalreporter.write_line(f"criterion {number:2d}: {status}  {title}  ({seconds:.1f}s)")

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "kit",
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("kit")

_CRITERIA: dict[str, tuple[int, str]] = {}
_OUTCOMES: dict[int, tuple[bool, str]] = {}


def pytest_configure(config):
    config.addinivalue_line(
        "markers",
        "acceptance(num, label): marks a test as one numbered acceptance criterion",
    )


def pytest_collection_modifyitems(items):
    for item in items:
        marker = item.get_closest_marker("acceptance")
        if marker is not None:
            _CRITERIA[item.nodeid] = (int(marker.args[0]), str(marker.args[1]))


def pytest_runtest_logreport(report):
    info = _CRITERIA.get(report.nodeid)
    if info is None:
        return
    num, label = info
    if report.when == "call":
        _OUTCOMES[num] = (report.passed, label)
    elif report.failed:
        _OUTCOMES[num] = (False, label)


def pytest_terminal_summary(terminalreporter):
    if not _OUTCOMES:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_OUTCOMES):
        passed, label = _OUTCOMES[num]
        verdict = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"criterion {num:02d} {verdict}: {label}")

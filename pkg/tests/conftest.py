import os
from collections import defaultdict

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

_criteria: dict[int, dict] = defaultdict(lambda: {"text": "", "outcomes": []})
_NOTES: dict[int, list[str]] = defaultdict(list)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, text): acceptance criterion checked by this test")


@pytest.fixture
def note(request):
    """Attach a line of context to the acceptance summary of the current criterion."""
    marker = request.node.get_closest_marker("criterion")

    def add(text: str) -> None:
        if marker is not None:
            _NOTES[marker.args[0]].append(text)

    return add


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        entry = _criteria[marker.args[0]]
        entry["text"] = marker.args[1]
        entry["outcomes"].append(report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        entry = _criteria[number]
        ok = entry["outcomes"] and all(o == "passed" for o in entry["outcomes"])
        line = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {entry['text']}"
        terminalreporter.write_line(line)
        for text in _NOTES.get(number, []):
            terminalreporter.write_line(f"               note: {text}")

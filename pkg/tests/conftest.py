"""Per-criterion PASS/FAIL summary for the acceptance suite."""

import pytest
from hypothesis import settings

# reproducible property tests; numeric code has no meaningful deadline
settings.register_profile("repo", derandomize=True, deadline=None, max_examples=200)
settings.load_profile("repo")

_RESULTS: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion covered by the test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    m = item.get_closest_marker("criterion")
    if m is None:
        return
    number, title = m.args
    entry = _RESULTS.setdefault(number, {"title": title, "ok": True, "ran": False})
    if rep.when == "call":
        entry["ran"] = True
    if rep.failed:
        entry["ok"] = False


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_RESULTS):
        e = _RESULTS[number]
        status = "PASS" if e["ok"] and e["ran"] else "FAIL"
        terminalreporter.write_line(f"{status} criterion {number:2d}: {e['title']}")

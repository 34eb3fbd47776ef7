from __future__ import annotations

import time
from pathlib import Path

import pytest

from covercert.io import load_curve

FIXTURES = Path(__file__).resolve().parents[1] / "src" / "covercert" / "fixtures"

# acceptance bookkeeping: criterion number -> {"title": str, "outcomes": [bool]}
_CRITERIA: dict[int, dict] = {}
_WALL_CLOCK_LIMIT = 60.0
_START = [0.0]


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion covered by this test")
    _START[0] = time.perf_counter()


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is not None:
            num, title = mark.args
            _CRITERIA.setdefault(num, {"title": title, "outcomes": []})


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    for num, title in getattr(report, "criteria", ()):
        _CRITERIA[num]["outcomes"].append(report.outcome == "passed")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    rep.criteria = [tuple(m.args) for m in item.iter_markers("criterion")]


def pytest_sessionfinish(session, exitstatus):
    elapsed = time.perf_counter() - _START[0]
    session.config._covercert_elapsed = elapsed
    if 9 in _CRITERIA and elapsed >= _WALL_CLOCK_LIMIT:
        _CRITERIA[9]["outcomes"].append(False)
        session.exitstatus = 1


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _CRITERIA:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for num in sorted(_CRITERIA):
        info = _CRITERIA[num]
        outs = info["outcomes"]
        status = "PASS" if outs and all(outs) else ("NOT RUN" if not outs else "FAIL")
        tr.write_line(f"criterion {num}: {status}  {info['title']}  ({sum(outs)}/{len(outs)} tests)")
    elapsed = getattr(config, "_covercert_elapsed", None)
    if elapsed is not None:
        tr.write_line(f"wall clock: {elapsed:.1f} s (limit {_WALL_CLOCK_LIMIT:.0f} s)")


@pytest.fixture(scope="session")
def e0_input():
    return load_curve(FIXTURES / "e0.json")


@pytest.fixture(scope="session")
def e1_input():
    return load_curve(FIXTURES / "e1.json")


@pytest.fixture(scope="session")
def e0_report(e0_input):
    from covercert.pipeline import build_model
    from covercert.cover import analyze

    return analyze(build_model(e0_input), e0_input.declared)


@pytest.fixture(scope="session")
def e1_report(e1_input):
    from covercert.pipeline import build_model
    from covercert.cover import analyze

    return analyze(build_model(e1_input), e1_input.declared)

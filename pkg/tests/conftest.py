import sys
from functools import lru_cache
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from hdiagram.construction import build_diagram, canonical_sequence  # noqa: E402

SYSTEMS = ("shift", "bitwise-not", "odometer", "zstar")
GUARD_DEPTHS = {"shift": 8, "bitwise-not": 8, "odometer": 14, "zstar": 200}


@lru_cache(maxsize=None)
def sequence(name):
    return canonical_sequence(name)


@lru_cache(maxsize=None)
def diagram(name, depth):
    return build_diagram(sequence(name), depth)


@pytest.fixture(scope="session")
def built():
    """``built(name, depth)``: a cached (sequence, diagram) pair."""
    return lambda name, depth: (sequence(name), diagram(name, depth))


# -- acceptance reporting ------------------------------------------------------

_acceptance: dict[int, dict] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    number, title = marker.args
    entry = _acceptance.setdefault(number, {"title": title, "passed": True, "ran": False})
    if report.when == "call":
        entry["ran"] = True
    if report.failed or (report.when == "call" and report.skipped):
        entry["passed"] = False


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_acceptance):
        entry = _acceptance[number]
        status = "PASS" if entry["passed"] and entry["ran"] else "FAIL"
        terminalreporter.write_line(f"AC{number:>3}  {status}  {entry['title']}")

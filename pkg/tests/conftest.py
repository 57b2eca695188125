import os
import random

import pytest
from hypothesis import settings

SEED = int(os.environ.get("MONOIDLAB_SEED", "20240607"))

settings.register_profile("default", max_examples=60, deadline=None, derandomize=True)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture
def rng():
    return random.Random(SEED)


# -- acceptance criteria reporting ----------------------------------------------

_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, limit): acceptance criterion with a time limit in seconds")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when != "call":
        return
    number, limit = mark.args
    _CRITERIA[number] = (rep.passed, rep.duration, limit)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        ok, took, limit = _CRITERIA[n]
        terminalreporter.write_line(
            f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  ({took:.2f} s, limit {limit} s)")

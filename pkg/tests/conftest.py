import math
import os
import sys

import numpy as np
import pytest

sys.path.insert(0, os.path.dirname(__file__))

from gaussmix import ChannelSpec, SqueezedThermalParams, make_cm  # noqa: E402

_criteria = {}


def random_cm(rng, r_max=2.0, n_max=2.0):
    return make_cm(SqueezedThermalParams(rng.uniform(0, r_max), rng.uniform(0, math.pi), rng.uniform(0, n_max)))


def random_channel(rng, n_max=2.0):
    n = rng.uniform(0, n_max)
    m = rng.uniform(0, 1) * math.sqrt(n * (1 + n)) * np.exp(1j * rng.uniform(0, 2 * math.pi))
    return ChannelSpec(rng.uniform(0, 1), n, complex(m))


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


def pytest_runtest_logreport(report):
    if report.when != "call" and not report.failed:
        return
    crit = dict(report.user_properties).get("criterion")
    if not crit:
        return
    key, title = crit
    prev = _criteria.get(key, (title, "PASS"))[1]
    failed = report.failed or prev == "FAIL"
    _criteria[key] = (title, "FAIL" if failed else "PASS")


@pytest.hookimpl(tryfirst=True)
def pytest_runtest_setup(item):
    m = item.get_closest_marker("criterion")
    if m:
        item.user_properties.append(("criterion", m.args))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_criteria, key=lambda k: int(k.lstrip("AC"))):
        title, status = _criteria[key]
        terminalreporter.write_line(f"[{status}] {key}: {title}")

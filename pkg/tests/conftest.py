import random

import pytest

from orecent import Field, OreContext

F_P = Field(10007)


@pytest.fixture
def rng():
    return random.Random(20261016)


@pytest.fixture
def ctx_plain():
    """sigma(y) = y^2, delta = 0."""
    return OreContext.from_strings("y^2", "0")


@pytest.fixture
def ctx_delta():
    """sigma(y) = y^2, delta(y) = 1."""
    return OreContext.from_strings("y^2", "1")


CONTEXTS = [
    ("y^2", "0", "rationals"),
    ("y^2", "1", "rationals"),
    ("y^2 + 1", "y - 1", "rationals"),
    ("y^3 - 2*y + 1/2", "y^2 - 3", "rationals"),
    ("y^2 + 3*y", "2", "fp:10007"),
    ("y^3 + y", "y^2", "fp:7"),
]


@pytest.fixture(params=CONTEXTS, ids=[f"{s}|{d}|{f}" for s, d, f in CONTEXTS])
def any_ctx(request):
    s, d, f = request.param
    return OreContext.from_strings(s, d, f)


_CRITERIA: dict[str, list[str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion identifier")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    label = dict(report.user_properties).get("criterion")
    if label:
        _CRITERIA.setdefault(label, []).append(report.outcome)


def pytest_runtest_setup(item):
    marker = item.get_closest_marker("criterion")
    if marker:
        item.user_properties.append(("criterion", marker.args[0]))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_CRITERIA, key=lambda s: (int("".join(c for c in s.split()[0] if c.isdigit())), s)):
        outcomes = _CRITERIA[label]
        verdict = "PASS" if all(o == "passed" for o in outcomes) else "FAIL"
        terminalreporter.write_line(f"{verdict}  criterion {label}")

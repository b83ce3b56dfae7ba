import math

import pytest

from magicpolygon.core import Labeling


def read_drawing(vertices, midpoints, center, start):
    """Build a Labeling from drawn node coordinates.

    ``vertices``/``midpoints`` map (x, y) -> value with y pointing up.
    Vertices are read clockwise starting at ``start``; each midpoint is the
    drawn node closest to the geometric midpoint of its edge.
    """
    (cx, cy), c_value = center
    ordered = sorted(vertices, key=lambda p: -math.atan2(p[1] - cy, p[0] - cx))
    k = ordered.index(start)
    ordered = ordered[k:] + ordered[:k]
    n = len(ordered)
    mids = []
    for i in range(n):
        (x1, y1), (x2, y2) = ordered[i], ordered[(i + 1) % n]
        gx, gy = (x1 + x2) / 2, (y1 + y2) / 2
        nearest = min(midpoints, key=lambda p: (p[0] - gx) ** 2 + (p[1] - gy) ** 2)
        mids.append(midpoints[nearest])
    return Labeling(n, tuple(vertices[p] for p in ordered), tuple(mids), c_value)


# 3x3 square drawn as a 4-gon: corners are vertices, edge centres midpoints.
LO_SHU = read_drawing(
    vertices={(0, 4): 2, (4, 4): 6, (4, 0): 8, (0, 0): 4},
    midpoints={(2, 4): 7, (4, 2): 1, (2, 0): 3, (0, 2): 9},
    center=((2, 2), 5),
    start=(0, 4),
)

# The magic hexagon with its magic sum of 21.
HEXAGON = read_drawing(
    vertices={(0, 0): 1, (2, 0): 9, (3.17, 2): 2, (2, 4): 13, (0, 4): 5, (-1.17, 2): 12},
    midpoints={(1, 0): 11, (1, 4): 3, (2.67, 1): 10, (-0.67, 3): 4, (2.67, 3): 6, (-0.67, 1): 8},
    center=((1, 2), 7),
    start=(0, 4),
)


@pytest.fixture
def lo_shu():
    return LO_SHU


@pytest.fixture
def hexagon():
    return HEXAGON


# One PASS/FAIL line per acceptance criterion in the terminal summary.
_CRITERIA: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.skipped:
        return
    if report.when == "call" or report.failed:
        number, title = marker.args
        ok, title_seen = _CRITERIA.get(number, (True, title))
        _CRITERIA[number] = (ok and report.passed, title_seen)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        ok, title = _CRITERIA[number]
        terminalreporter.write_line(f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {title}")

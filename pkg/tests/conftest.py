import math
import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from metriclie import (  # noqa: E402
    LieAlgebra,
    MetricLieAlgebra,
    build_heisenberg,
    build_lie_hypersurface,
    build_r_alpha,
    build_solvable_model,
)

THETAS = [0.0, math.pi / 8, math.pi / 4, 3 * math.pi / 8, math.pi / 2]
RATIONAL_PAIRS = [
    (Fraction(1), Fraction(0)),
    (Fraction(3, 5), Fraction(4, 5)),
    (Fraction(4, 5), Fraction(3, 5)),
    (Fraction(5, 13), Fraction(12, 13)),
    (Fraction(0), Fraction(1)),
]
ALPHAS = [Fraction(-1), Fraction(-1, 2), Fraction(0), Fraction(1, 4), Fraction(1, 2), Fraction(1)]


def float_catalog():
    out = {}
    for n in range(2, 7):
        for t in THETAS:
            out[f"s(n={n},theta={t:.4f})"] = build_lie_hypersurface(n, t).metric_algebra
    for n in (2, 3, 4):
        out[f"solvable-model(n={n})"] = build_solvable_model(n, exact=False).metric_algebra
    for m in (3, 5, 7):
        out[f"heisenberg({m})"] = build_heisenberg(m, exact=False)
    for a in ALPHAS:
        out[f"r_alpha({a})"] = build_r_alpha(float(a))
    out["abelian(4)"] = MetricLieAlgebra(LieAlgebra.abelian(4, exact=False))
    return out


def exact_catalog(max_n=4):
    out = {}
    for n in range(2, max_n + 1):
        for c, s in RATIONAL_PAIRS:
            out[f"s(n={n},cos={c},sin={s})"] = build_lie_hypersurface(n, cos=c, sin=s).metric_algebra
    for n in (2, 3):
        out[f"solvable-model(n={n})"] = build_solvable_model(n).metric_algebra
    for m in (3, 5):
        out[f"heisenberg({m})"] = build_heisenberg(m)
    for a in ALPHAS:
        out[f"r_alpha({a})"] = build_r_alpha(a)
    out["abelian(3)"] = MetricLieAlgebra(LieAlgebra.abelian(3))
    return out


FLOAT_CATALOG = float_catalog()
EXACT_CATALOG = exact_catalog()


def catalog_params(catalog):
    return [pytest.param(m, id=name) for name, m in catalog.items()]


# ---------------------------------------------------------------------------
# one PASS/FAIL line per acceptance criterion in the terminal summary

_criteria: dict[int, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call" and not report.failed:
        return
    number, title = marker.args
    entry = _criteria.setdefault(number, {"title": title, "passed": True, "count": 0})
    entry["count"] += report.when == "call"
    if report.failed:
        entry["passed"] = False


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        entry = _criteria[number]
        verdict = "PASS" if entry["passed"] else "FAIL"
        terminalreporter.write_line(f"criterion {number:2d}: {verdict}  {entry['title']} ({entry['count']} checks)")

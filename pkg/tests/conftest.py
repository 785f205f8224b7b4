from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import strategies as st

from ghsimplex.corpus import builtin_corpus
from ghsimplex.metric import validate

CORPUS = builtin_corpus()

# filled in by test_acceptance through the report hook below
ACCEPTANCE_LINES: dict[str, tuple[str, str]] = {}


def lambda_grid(diam, count: int = 12, span: int = 3) -> list[Fraction]:
    """``count`` evenly spaced values covering ``[0, span * diam]``."""
    top = Fraction(span) * diam if diam > 0 else Fraction(span)
    return [top * i / (count - 1) for i in range(count)]


def interior_grid(diam, count: int = 6) -> list[Fraction]:
    """``count`` evenly spaced values strictly inside ``(0, diam)``."""
    return [Fraction(diam) * i / (count + 1) for i in range(1, count + 1)]


@pytest.fixture(scope="session")
def corpus():
    return CORPUS


# -- hypothesis strategies -------------------------------------------------------

rationals = st.fractions(min_value=0, max_value=20, max_denominator=6)
positive_rationals = st.fractions(min_value=Fraction(1, 6), max_value=20, max_denominator=6)


@st.composite
def metric_spaces(draw, min_size: int = 1, max_size: int = 5):
    """Random metrics: off-diagonal entries in ``[lo, 2 lo]`` never break the triangle inequality."""
    m = draw(st.integers(min_size, max_size))
    lo = draw(st.integers(1, 4))
    q = draw(st.sampled_from([1, 2, 3]))
    mat = [[Fraction(0)] * m for _ in range(m)]
    for i in range(m):
        for j in range(i + 1, m):
            v = Fraction(draw(st.integers(lo * q, 2 * lo * q)), q)
            mat[i][j] = mat[j][i] = v
    return validate(mat)


@st.composite
def line_spaces(draw, min_size: int = 2, max_size: int = 6):
    """Distinct points on a line; these produce far more varied partition statistics."""
    coords = draw(st.lists(st.integers(0, 30), min_size=min_size, max_size=max_size, unique=True))
    return validate([[abs(a - b) for b in coords] for a in coords])


@st.composite
def ultrametric_spaces(draw, min_size: int = 1, max_size: int = 6):
    m = draw(st.integers(min_size, max_size))
    clusters = [[i] for i in range(m)]
    mat = [[Fraction(0)] * m for _ in range(m)]
    height = Fraction(0)
    while len(clusters) > 1:
        height += draw(st.integers(1, 4))
        a = draw(st.integers(0, len(clusters) - 1))
        b = draw(st.integers(0, len(clusters) - 2))
        if b >= a:
            b += 1
        for i in clusters[a]:
            for j in clusters[b]:
                mat[i][j] = mat[j][i] = height
        merged = clusters[a] + clusters[b]
        clusters = [c for k, c in enumerate(clusters) if k not in (a, b)] + [merged]
    return validate(mat)


# -- acceptance summary ----------------------------------------------------------

@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    title = getattr(item.function, "criterion", None)
    if title is None or rep.when != "call":
        return
    detail = ""
    if rep.failed and call.excinfo is not None:
        detail = str(call.excinfo.value).splitlines()[0][:160]
    ACCEPTANCE_LINES[item.nodeid] = (title, "PASS" if rep.passed else f"FAIL  {detail}")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for title, status in sorted(ACCEPTANCE_LINES.values()):
        terminalreporter.write_line(f"{title}: {status}")

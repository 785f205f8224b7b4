from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings

from conftest import CORPUS, line_spaces, metric_spaces
from ghsimplex.curves import PLCurve
from ghsimplex.distinguish import (
    distinguishability_report, first_difference, indistinguishable, report_markdown,
)
from ghsimplex.metric import make_simplex, scale, triangle_space
from ghsimplex.oracle import brute_gh
from ghsimplex.simplex import gh_simplex_at

F = Fraction


def test_pairs_space_and_triple_space(corpus):
    v = indistinguishable(corpus["pairs_UX"], corpus["triple1_UY"])
    assert v.indistinguishable and v.route == "ultrametric-spectrum"
    assert v.witness is None


def test_simplexes_of_different_size():
    v = indistinguishable(make_simplex(3), make_simplex(4))
    assert not v.indistinguishable and v.route == "cardinality"
    assert (v.witness.n, v.witness.lam, v.witness.value_x, v.witness.value_y) == (4, 2, 2, 1)


def test_scaled_copy_differs_at_one_point():
    X = triangle_space(1, 2, 2)
    v = indistinguishable(X, scale(X, 2))
    assert v.route == "diameter"
    assert (v.witness.n, v.witness.lam) == (1, 0)


def test_triangles_with_different_diameters():
    v = indistinguishable(triangle_space(1, 2, F(5, 2)), triangle_space(1, 2, 2))
    assert (v.witness.n, v.witness.lam, v.witness.value_x, v.witness.value_y) == (1, 0, F(5, 2), 2)


def test_non_ultrametric_twins(corpus):
    for a, b in (("twin_a1", "twin_a2"), ("twin_b1", "twin_b2")):
        X, Y = corpus[a], corpus[b]
        assert X.distance_multiset() != Y.distance_multiset()
        v = indistinguishable(X, Y)
        assert v.indistinguishable and v.route == "curves"
        assert brute_gh(X, Y) > 0


def test_first_difference():
    a = PLCurve.build([(0, 2), (1, 1)], 1)
    b = PLCurve.build([(0, 2), (1, 1), (2, 1)], 1)
    assert first_difference(a, a) is None
    assert first_difference(a, b) == 2
    c = PLCurve.line(2, -1)
    assert first_difference(PLCurve.build([(0, 2), (1, 1)], -1), c) is None
    assert first_difference(PLCurve.build([(0, 2), (1, 1)], 0), c) == 2


@pytest.mark.parametrize("a, b", [
    (a, b) for a, b in combinations(CORPUS, 2) if CORPUS[a].m <= 5 and CORPUS[b].m <= 5
])
def test_witnesses_are_sound(a, b):
    X, Y = CORPUS[a], CORPUS[b]
    v = indistinguishable(X, Y)
    if v.indistinguishable:
        return
    w = v.witness
    assert w.n <= max(X.m, Y.m)
    assert gh_simplex_at(X, w.n, w.lam) == w.value_x != w.value_y == gh_simplex_at(Y, w.n, w.lam)
    S = make_simplex(w.n, w.lam)
    assert brute_gh(S, X, cap=25) == w.value_x
    assert brute_gh(S, Y, cap=25) == w.value_y


@settings(max_examples=40, deadline=None)
@given(metric_spaces(max_size=5))
def test_isometric_copies_are_indistinguishable(X):
    Y = X.relabel(list(reversed(range(X.m))))
    assert indistinguishable(X, Y).indistinguishable


@settings(max_examples=60, deadline=None)
@given(line_spaces(max_size=5), line_spaces(max_size=5))
def test_verdict_agrees_with_direct_sampling(X, Y):
    v = indistinguishable(X, Y)
    grid = [F(k, 2) for k in range(0, 4 * int(max(X.diameter, Y.diameter)) + 4)]
    sampled_equal = all(
        gh_simplex_at(X, n, lam) == gh_simplex_at(Y, n, lam)
        for n in range(1, max(X.m, Y.m) + 2) for lam in grid
    )
    if v.indistinguishable:
        assert sampled_equal


def test_report_contents(corpus):
    r = distinguishability_report(corpus["pairs_UX"], corpus["triple1_UY"])
    assert r["verdict"] == "indistinguishable"
    assert [row["equal"] for row in r["per_n"]] == [True] * 4
    assert r["equal_distance_multisets"] is False
    assert r["spectra"] == [["2", "1", "1"], ["2", "1", "1"]]
    md = report_markdown(r, ("UX", "UY"))
    assert md.startswith("# Distinguishability: UX vs UY")
    assert "**Verdict:** indistinguishable" in md


def test_report_for_identical_spaces(corpus):
    X = corpus["random_m5_0"]
    r = distinguishability_report(X, X)
    assert r["verdict"] == "indistinguishable"
    assert r["equal_distance_multisets"] is True
    assert all(row["equal"] for row in r["per_n"])
    assert all(row["M_x"] == row["M_y"] for row in r["per_n"] if "M_x" in row)

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import CORPUS, line_spaces, metric_spaces
from ghsimplex.curves import PLCurve, curve_equal
from ghsimplex.errors import MalformedMSet
from ghsimplex.extremal import (
    Case, MSet, extreme_points, half_plane, in_minus, in_plus, m_set, m_set_from_ext, reconstruct_curve,
)
from ghsimplex.metric import make_simplex, triangle_space
from ghsimplex.simplex import gh_simplex_curve

F = Fraction
TRI = triangle_space(1, 2, F(5, 2))


def test_extreme_point_examples(corpus):
    assert extreme_points(TRI, 2) == ((2, 1),)
    assert extreme_points(make_simplex(4), 4) == ((1, 0),)
    assert extreme_points(corpus["pairs_UX"], 2) == ((2, 1),)
    with pytest.raises(ValueError):
        extreme_points(TRI, 1)


def test_m_set_examples():
    ms = m_set(TRI, 2)
    assert ms.case is Case.ALL_PLUS and ms.points == {(2, 1)}
    ms = m_set(make_simplex(3), 2)
    assert ms.case is Case.ALL_PLUS and ms.points == {(1, 1)}


def test_reconstruct_example():
    c = reconstruct_curve(MSet(frozenset({(F(2), F(1))}), Case.ALL_PLUS), F(5, 2))
    for k in range(41):
        x = F(k, 8)
        assert c(x) == max(F(5, 2) - x, 1, x - 2)


def test_single_corner_gives_a_v():
    diam, a_plus = F(7), F(3)
    corner = (a_plus, (diam - a_plus) / 2)
    c = reconstruct_curve(MSet(frozenset({corner}), Case.ALL_MINUS), diam)
    assert c.breakpoints == ((0, diam), ((diam + a_plus) / 2, (diam - a_plus) / 2))
    assert c.tail_slope == 1


def test_malformed_sets():
    with pytest.raises(MalformedMSet):
        reconstruct_curve(MSet(frozenset(), Case.ALL_PLUS), 1)
    with pytest.raises(MalformedMSet):
        reconstruct_curve(MSet(frozenset({(F(-1), F(0))}), Case.ALL_PLUS), 1)
    with pytest.raises(MalformedMSet):
        m_set_from_ext((), 1)


def test_half_planes_share_the_line():
    assert in_plus((1, 2), 5) and in_minus((1, 2), 5)
    assert half_plane((1, 2), 5) == "boundary"
    assert half_plane((1, 3), 5) == "plus"
    assert half_plane((1, 1), 5) == "minus"


@pytest.mark.parametrize("name, n, case", [
    ("plane_all_plus", 2, Case.ALL_PLUS),
    ("segments_4x2", 4, Case.ALL_MINUS),
    ("plane_mixed_horizontal", 3, Case.MIXED_HORIZONTAL),
    ("plane_mixed_inclined", 3, Case.MIXED_INCLINED),
])
def test_every_case_occurs_in_the_corpus(name, n, case):
    X = CORPUS[name]
    ms = m_set(X, n)
    assert ms.case is case
    assert curve_equal(reconstruct_curve(ms, X.diameter), gh_simplex_curve(X, n))


def test_all_minus_set_is_the_corner(corpus):
    X = corpus["segments_4x2"]
    ms = m_set(X, 4)
    a_plus = max(a for a, _ in ms.ext)
    assert ms.points == {(a_plus, (X.diameter - a_plus) / 2)}


def test_m_set_json_shape(corpus):
    d = m_set(corpus["plane_mixed_inclined"], 3).to_dict()
    assert d["case_tag"] == "MixedInclined"
    assert {e["half_plane"] for e in d["ext"]} <= {"plus", "minus", "boundary"}
    assert all(len(p) == 2 for p in d["M"])


@given(line_spaces(max_size=7), st.data())
def test_round_trip_on_line_spaces(X, data):
    n = data.draw(st.integers(2, X.m))
    ext = extreme_points(X, n)
    assert ext
    ms = m_set(X, n, verify=False)
    assert curve_equal(reconstruct_curve(ms, X.diameter), gh_simplex_curve(X, n))


@given(metric_spaces(min_size=2, max_size=6), st.data())
def test_round_trip_on_random_metrics(X, data):
    n = data.draw(st.integers(2, X.m))
    ms = m_set(X, n, verify=False)
    assert reconstruct_curve(ms, X.diameter) == gh_simplex_curve(X, n)


@given(line_spaces(min_size=3, max_size=6), line_spaces(min_size=3, max_size=6))
def test_m_sets_decide_curve_equality(X, Y):
    if X.m != Y.m:
        return
    by_m = X.diameter == Y.diameter and all(m_set(X, n) == m_set(Y, n) for n in range(2, X.m + 1))
    by_curves = all(curve_equal(gh_simplex_curve(X, n), gh_simplex_curve(Y, n)) for n in range(1, X.m + 1))
    assert by_m == by_curves


def test_m_sets_of_the_twins(corpus):
    for a, b in (("twin_a1", "twin_a2"), ("twin_b1", "twin_b2"), ("pairs_UX", "triple1_UY")):
        X, Y = corpus[a], corpus[b]
        for n in range(2, X.m + 1):
            assert m_set(X, n) == m_set(Y, n)


def test_curve_is_unchanged_by_line_alone():
    # a single point exactly on the line
    c = reconstruct_curve(MSet(frozenset({(F(1), F(2))}), Case.ALL_PLUS), F(5))
    assert c == PLCurve.build([(0, 5), (3, 2)], 1)

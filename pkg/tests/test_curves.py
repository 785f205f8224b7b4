from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ghsimplex.curves import PLCurve, canonical, curve_equal, curve_eval, pointwise_max, pointwise_min, sample

F = Fraction


@st.composite
def curves(draw):
    """Continuous curves with unit-slope-or-flat pieces and a random tail."""
    y = F(draw(st.integers(0, 12)), 2)
    pts = [(F(0), y)]
    x = F(0)
    for _ in range(draw(st.integers(0, 5))):
        x += F(draw(st.integers(1, 8)), 2)
        y = pts[-1][1] + draw(st.sampled_from([-1, 0, 1])) * (x - pts[-1][0])
        pts.append((x, y))
    return PLCurve.build(pts, draw(st.sampled_from([-1, 0, 1])))


probe = st.fractions(min_value=0, max_value=40, max_denominator=8)


def test_build_drops_collinear_and_tail_points():
    c = PLCurve.build([(0, 3), (1, 2), (2, 1), (3, 2), (4, 3)], 1)
    assert c.breakpoints == ((0, 3), (2, 1))
    assert c.tail_slope == 1


def test_build_rejects_conflicting_values():
    with pytest.raises(ValueError):
        PLCurve.build([(0, 1), (0, 2)], 0)
    with pytest.raises(ValueError):
        PLCurve(((F(1), F(0)),), F(0))


def test_evaluation():
    c = PLCurve.build([(0, 1), (1, 0)], 1)
    assert c(0) == 1
    assert c(F(1, 2)) == F(1, 2)
    assert curve_eval(c, 3) == 2
    with pytest.raises(ValueError):
        c(-1)


def test_max_of_two_lines_is_a_v():
    v = pointwise_max(PLCurve.line(F(5, 2), -1), PLCurve.line(0, 1))
    assert v.breakpoints == ((0, F(5, 2)), (F(5, 4), F(5, 4)))
    assert v.tail_slope == 1


def test_min_crossing_in_the_tail():
    c = pointwise_min(PLCurve.line(0, 1), PLCurve.line(3, 0))
    assert c.breakpoints == ((0, 0), (3, 3))
    assert c.tail_slope == 0


def test_serialization_and_sampling():
    c = PLCurve.build([(0, F(5, 2)), (F(3, 2), 1), (3, 1)], 1)
    assert c.to_dict() == {"breakpoints": [["0", "5/2"], ["3/2", "1"], ["3", "1"]], "tail_slope": "1"}
    assert str(c) == "[(0, 5/2), (3/2, 1), (3, 1)] then slope 1"
    assert sample(c, ["1/2"]) == [(0, F(5, 2)), (F(1, 2), 2), (F(3, 2), 1), (3, 1)]


def test_non_canonical_inputs_compare_equal():
    a = PLCurve(((F(0), F(0)), (F(1), F(1))), F(1))
    b = PLCurve.line(0, 1)
    assert a != b
    assert curve_equal(a, b)
    assert canonical(a) == b


@given(curves(), curves(), probe)
def test_pointwise_max_and_min(c1, c2, x):
    assert pointwise_max(c1, c2)(x) == max(c1(x), c2(x))
    assert pointwise_min(c1, c2)(x) == min(c1(x), c2(x))


@given(curves(), curves())
def test_combined_tails_are_right_far_out(c1, c2):
    far = max(c1.xs + c2.xs) + 1000
    hi, lo = pointwise_max(c1, c2), pointwise_min(c1, c2)
    for x in (far, far + 1):
        assert hi(x) == max(c1(x), c2(x))
        assert lo(x) == min(c1(x), c2(x))


@given(curves())
def test_canonical_form_is_minimal(c):
    slopes = c.slopes()
    assert all(a != b for a, b in zip(slopes, slopes[1:]))
    assert canonical(c) == c

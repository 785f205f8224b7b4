from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings

from conftest import metric_spaces
from ghsimplex.errors import CapExceeded, DimensionMismatch
from ghsimplex.metric import make_simplex, triangle_space, validate
from ghsimplex.oracle import Correspondence, brute_gh, brute_gh_witness, distortion

F = Fraction
TRI = triangle_space(1, 2, F(5, 2))


def every_correspondence_gh(X, Y):
    """Minimum distortion over every surjective relation (no pruning, no reduction)."""
    best = None
    cells = [(i, j) for i in range(X.m) for j in range(Y.m)]
    for bits in product((False, True), repeat=len(cells)):
        pairs = frozenset(c for c, b in zip(cells, bits) if b)
        if {i for i, _ in pairs} != set(range(X.m)) or {j for _, j in pairs} != set(range(Y.m)):
            continue
        v = distortion(Correspondence(X.m, Y.m, pairs), X, Y)
        best = v if best is None else min(best, v)
    return best


def test_distortion_examples():
    ident = Correspondence.from_matrix([[i == j for j in range(3)] for i in range(3)])
    assert distortion(ident, TRI, TRI) == 0
    full = Correspondence.from_matrix([[True] * 3])
    assert distortion(full, make_simplex(1), TRI) == F(5, 2)
    assert distortion(ident, TRI, make_simplex(3, 2)) == 1
    with pytest.raises(DimensionMismatch):
        distortion(ident, TRI, make_simplex(2))


def test_correspondence_must_be_surjective():
    with pytest.raises(ValueError):
        Correspondence.from_matrix([[True, False], [True, False]])
    R = Correspondence.from_matrix([[True, False], [False, True]])
    assert R.matrix() == [[True, False], [False, True]]


def test_oracle_examples():
    assert brute_gh(TRI, TRI) == 0
    assert brute_gh(make_simplex(1), TRI) == F(5, 2)
    assert brute_gh(make_simplex(2, 2), TRI) == 1


def test_witness_attains_the_value():
    X = validate([[0, 1, 3], [1, 0, 3], [3, 3, 0]])
    value, R = brute_gh_witness(X, make_simplex(2, 2))
    assert distortion(R, X, make_simplex(2, 2)) == value


def test_cap():
    big = make_simplex(6)
    with pytest.raises(CapExceeded):
        brute_gh(big, big)
    assert brute_gh(big, big, cap=None) == 0


@settings(max_examples=25, deadline=None)
@given(metric_spaces(max_size=3), metric_spaces(max_size=3))
def test_against_unreduced_search(X, Y):
    if X.m * Y.m > 9:
        return
    assert brute_gh(X, Y) == every_correspondence_gh(X, Y)


@settings(max_examples=40, deadline=None)
@given(metric_spaces(max_size=4), metric_spaces(max_size=4))
def test_symmetry(X, Y):
    assert brute_gh(X, Y) == brute_gh(Y, X)


@settings(max_examples=40, deadline=None)
@given(metric_spaces(max_size=4), metric_spaces(max_size=4), metric_spaces(max_size=4))
def test_triangle_inequality(X, Y, Z):
    assert brute_gh(X, Z) <= brute_gh(X, Y) + brute_gh(Y, Z)


@settings(max_examples=30, deadline=None)
@given(metric_spaces(max_size=4))
def test_isometric_copies_are_at_zero(X):
    Y = X.relabel(list(reversed(range(X.m))))
    assert brute_gh(X, Y) == 0

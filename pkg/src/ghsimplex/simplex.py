"""Gromov-Hausdorff distances from a finite space to the simplexes ``lam * Delta_n``.

Every public value here is ``2 * d_GH`` ("two_dgh"); halve only for display.

For ``n <= #X`` the value minimises ``max(diam D, lam - alpha(D), diam X - lam)``
over partitions ``D`` of ``X`` into ``n`` blocks.  For ``n > #X`` it is
``max(lam, diam X - lam)``.
"""

from __future__ import annotations

from fractions import Fraction

from .curves import PLCurve, pointwise_max, pointwise_min
from .errors import NotUltrametric, WrongCardinality
from .metric import FiniteMetricSpace, is_ultrametric, to_rational
from .mst import spectrum
from .partitions import DEFAULT_CAP, ad_set, pareto_front


def _large_simplex_value(X: FiniteMetricSpace, lam: Fraction) -> Fraction:
    return max(lam, X.diameter - lam)


def gh_simplex_at(X: FiniteMetricSpace, n: int, lam, *, cap: int | None = DEFAULT_CAP,
                  fast: bool = False) -> Fraction:
    """``2 d_GH(lam * Delta_n, X)``.

    With ``fast=True`` ultrametric and three-point spaces use their closed
    forms instead of the partition search.
    """
    lam = to_rational(lam)
    if n < 1:
        raise ValueError("n must be positive")
    if lam < 0:
        raise ValueError("lambda must be nonnegative")
    if n > X.m:
        return _large_simplex_value(X, lam)
    if n == 1:
        return X.diameter
    if fast:
        if X.m == 3:
            return three_point_gh(X, _simplex_as_triangle(n, lam))
        if is_ultrametric(X):
            return ultra_value(X, n, lam)
    D = X.diameter
    best = min(max(d, lam - a) for a, d in ad_set(X, n, cap))
    return max(best, D - lam)


def angle_envelope(points) -> PLCurve:
    """Lower envelope of ``lam -> max(d, lam - alpha)`` over the given ``(alpha, d)`` pairs.

    Dominated pairs are dropped first; along the remaining frontier both
    coordinates increase, so the envelope alternates flat runs at height
    ``d_i`` and unit-slope rises, with corners at ``(alpha_i + d_i, d_i)``.
    """
    front = pareto_front(points)
    if not front:
        raise ValueError("empty point set")
    a0, d0 = front[0]
    verts = [(Fraction(0), d0), (a0 + d0, d0)]
    for (a_prev, _), (a, d) in zip(front, front[1:]):
        verts.append((a_prev + d, d))
        verts.append((a + d, d))
    # build() merges the two origin points when a0 + d0 == 0
    return PLCurve.build(verts, 1)


def angle_envelope_naive(points) -> PLCurve:
    """Same envelope as :func:`angle_envelope` built by pairwise minima (no pruning)."""
    angles = [pointwise_max(PLCurve.line(d, 0), PLCurve.line(-a, 1)) for a, d in points]
    return pointwise_min(*angles)


def curve_from_points(points, diam) -> PLCurve:
    """``lam -> max(diam - lam, envelope(points)(lam))``."""
    return pointwise_max(PLCurve.line(diam, -1), angle_envelope(points))


def _large_simplex_curve(D: Fraction) -> PLCurve:
    return pointwise_max(PLCurve.line(D, -1), PLCurve.line(0, 1))


def gh_simplex_curve(X: FiniteMetricSpace, n: int, *, cap: int | None = DEFAULT_CAP) -> PLCurve:
    """The whole function ``lam -> 2 d_GH(lam * Delta_n, X)`` as an exact curve."""
    if n < 1:
        raise ValueError("n must be positive")
    D = X.diameter
    if n > X.m:
        return _large_simplex_curve(D)
    if n == 1:
        # the only partition has infinite alpha
        return PLCurve.line(D, 0)
    return curve_from_points(ad_set(X, n, cap), D)


def _sigma_padded(X: FiniteMetricSpace) -> tuple[Fraction, ...]:
    if X.m < 2:
        return ()
    return spectrum(X).sigma


def ultra_value(X: FiniteMetricSpace, k: int, lam) -> Fraction:
    """Closed form of ``2 d_GH(lam * Delta_k, X)`` for ultrametric ``X``."""
    lam = to_rational(lam)
    sigma = _sigma_padded(X)
    m = X.m
    s1 = sigma[0] if sigma else Fraction(0)
    if k == 1:
        return s1
    if k > m:
        return max(s1 - lam, lam)
    if k == m:
        return max(s1 - lam, lam - sigma[m - 2])
    return max(s1 - lam, sigma[k - 1], lam - sigma[k - 2])


def ultra_curve(X: FiniteMetricSpace, k: int) -> PLCurve:
    """Curve of :func:`ultra_value` in ``lam``; ``X`` must be ultrametric."""
    if not is_ultrametric(X):
        raise NotUltrametric("the closed form needs an ultrametric space")
    if k < 1:
        raise ValueError("k must be positive")
    sigma = _sigma_padded(X)
    m = X.m
    s1 = sigma[0] if sigma else Fraction(0)
    if k == 1:
        return PLCurve.line(s1, 0)
    falling = PLCurve.line(s1, -1)
    if k > m:
        return pointwise_max(falling, PLCurve.line(0, 1))
    if k == m:
        return pointwise_max(falling, PLCurve.line(-sigma[m - 2], 1))
    return pointwise_max(falling, PLCurve.line(sigma[k - 1], 0), PLCurve.line(-sigma[k - 2], 1))


# -- three-point spaces --------------------------------------------------------

def _triple(M) -> tuple[Fraction, Fraction, Fraction]:
    if isinstance(M, FiniteMetricSpace):
        if M.m != 3:
            raise WrongCardinality(f"expected 3 points, got {M.m}")
        vals = [M.dist[0][1], M.dist[0][2], M.dist[1][2]]
    else:
        vals = [to_rational(v) for v in M]
        if len(vals) != 3:
            raise WrongCardinality(f"expected 3 distances, got {len(vals)}")
    return tuple(sorted(vals))


def _simplex_as_triangle(n: int, lam: Fraction) -> tuple[Fraction, Fraction, Fraction]:
    """``lam * Delta_n`` for ``n <= 3`` written as a (possibly degenerate) triangle."""
    if n == 1 or lam == 0:
        return (Fraction(0),) * 3
    if n == 2:
        return (Fraction(0), lam, lam)
    return (lam, lam, lam)


def three_point_gh(M1, M2) -> Fraction:
    """``2 d_GH`` between two three-point spaces.

    Either operand may be a 3-point space or a triple of distances; zero
    distances are allowed in triples so that ``lam * Delta_1`` and
    ``lam * Delta_2`` can be passed as ``(0, 0, 0)`` and ``(0, lam, lam)``.
    The value is the max-norm of the difference of the sorted distance triples.
    """
    t1, t2 = _triple(M1), _triple(M2)
    return max(abs(a - b) for a, b in zip(t1, t2))


def three_point_dgh(M1, M2) -> Fraction:
    return three_point_gh(M1, M2) / 2

"""Extreme points of the (alpha, diam) cloud and the canonical sets M_n(X).

Points live in the plane with coordinates ``(alpha, d)``.  The line
``alpha + 2 d = diam X`` splits it into the closed half-planes ``plus``
(``>=``) and ``minus`` (``<=``); points on the line belong to both.

``M_n(X)`` together with ``diam X`` pins down the curve
``lam -> 2 d_GH(lam * Delta_n, X)``, and the curve pins down ``M_n(X)``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from .curves import PLCurve
from .errors import MalformedMSet, ReconstructionMismatch
from .metric import FiniteMetricSpace, format_rational
from .partitions import DEFAULT_CAP, ad_set, pareto_front
from .simplex import curve_from_points, gh_simplex_curve


class Case(str, enum.Enum):
    ALL_PLUS = "AllPlus"
    ALL_MINUS = "AllMinus"
    MIXED_HORIZONTAL = "MixedHorizontal"
    MIXED_INCLINED = "MixedInclined"


@dataclass(frozen=True)
class MSet:
    points: frozenset[tuple[Fraction, Fraction]]
    case: Case = field(compare=False)
    ext: tuple[tuple[Fraction, Fraction], ...] = field(default=(), compare=False)
    diam: Fraction = field(default=Fraction(0), compare=False)

    def sorted_points(self):
        return sorted(self.points)

    def to_dict(self) -> dict:
        def pt(p):
            return [format_rational(p[0]), format_rational(p[1])]

        return {
            "case_tag": self.case.value,
            "ext": [dict(point=pt(p), half_plane=half_plane(p, self.diam)) for p in self.ext],
            "M": [pt(p) for p in self.sorted_points()],
        }


def _excess(p, diam) -> Fraction:
    return p[0] + 2 * p[1] - diam


def in_plus(p, diam) -> bool:
    return _excess(p, diam) >= 0


def in_minus(p, diam) -> bool:
    return _excess(p, diam) <= 0


def half_plane(p, diam) -> str:
    e = _excess(p, diam)
    return "boundary" if e == 0 else ("plus" if e > 0 else "minus")


def extreme_points(X: FiniteMetricSpace, n: int, cap: int | None = DEFAULT_CAP):
    """Pareto frontier of the (alpha, diam) pairs, sorted by alpha."""
    if not 2 <= n <= X.m:
        raise ValueError(f"extreme points need 2 <= n <= #X, got n={n}, #X={X.m}")
    return tuple(pareto_front(ad_set(X, n, cap)))


def _closest(points, diam):
    # smallest |alpha + 2d - diam|; ties go to the larger alpha
    return min(points, key=lambda p: (abs(_excess(p, diam)), -p[0]))


def m_set_from_ext(ext, diam) -> MSet:
    """Case analysis producing M_n from an extreme set and the diameter."""
    ext = tuple(sorted(ext))
    if not ext:
        raise MalformedMSet("empty extreme set")
    diam = Fraction(diam)
    plus = [p for p in ext if in_plus(p, diam)]
    minus = [p for p in ext if in_minus(p, diam)]
    if len(plus) == len(ext):
        return MSet(frozenset(ext), Case.ALL_PLUS, ext, diam)
    if len(minus) == len(ext):
        a_plus = max(a for a, _ in ext)
        return MSet(frozenset({(a_plus, (diam - a_plus) / 2)}), Case.ALL_MINUS, ext, diam)
    _, d_plus = _closest(plus, diam)
    a_minus, _ = _closest(minus, diam)
    if in_minus((a_minus, d_plus), diam):
        return MSet(frozenset(plus), Case.MIXED_HORIZONTAL, ext, diam)
    corner = (a_minus, (diam - a_minus) / 2)
    return MSet(frozenset(plus) | {corner}, Case.MIXED_INCLINED, ext, diam)


def m_set(X: FiniteMetricSpace, n: int, cap: int | None = DEFAULT_CAP, verify: bool = True) -> MSet:
    """M_n(X), checked against the directly computed curve unless ``verify`` is off."""
    ms = m_set_from_ext(extreme_points(X, n, cap), X.diameter)
    if verify:
        rebuilt = reconstruct_curve(ms, X.diameter)
        direct = gh_simplex_curve(X, n, cap=cap)
        if rebuilt != direct:
            raise ReconstructionMismatch(
                f"n={n}: M-set curve {rebuilt} differs from direct curve {direct}"
            )
    return ms


def reconstruct_curve(mset: MSet, diam) -> PLCurve:
    """The curve ``lam -> 2 d_GH(lam * Delta_n, X)`` rebuilt from M_n(X) and diam X."""
    pts = list(mset.points)
    if not pts:
        raise MalformedMSet("M-set is empty")
    diam = Fraction(diam)
    for a, d in pts:
        if a < 0 or d < 0:
            raise MalformedMSet(f"negative coordinate in {(a, d)}")
    return curve_from_points(pts, diam)

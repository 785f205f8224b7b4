"""Exact piecewise-linear functions on ``[0, inf)``.

A :class:`PLCurve` is a list of breakpoints ``(x, y)`` starting at ``x = 0``
plus the slope of the ray after the last breakpoint.  Canonical curves carry
no collinear breakpoints, so two canonical curves describe the same function
iff they are equal as values.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

from .metric import format_rational, to_rational

Point = tuple[Fraction, Fraction]


@dataclass(frozen=True)
class PLCurve:
    breakpoints: tuple[Point, ...]
    tail_slope: Fraction

    def __post_init__(self):
        if not self.breakpoints or self.breakpoints[0][0] != 0:
            raise ValueError("a curve must start with a breakpoint at 0")
        xs = [x for x, _ in self.breakpoints]
        if any(b <= a for a, b in zip(xs, xs[1:])):
            raise ValueError("breakpoint abscissae must strictly increase")

    @classmethod
    def build(cls, points: Iterable[tuple], tail_slope) -> "PLCurve":
        """Canonical curve through ``points`` (sorted, merged, collinear points dropped)."""
        pts: dict[Fraction, Fraction] = {}
        for x, y in points:
            x, y = to_rational(x), to_rational(y)
            if x in pts and pts[x] != y:
                raise ValueError(f"two values at x={x}")
            pts[x] = y
        ordered = sorted(pts.items())
        return cls(tuple(_simplify(ordered, Fraction(tail_slope))), Fraction(tail_slope))

    @classmethod
    def line(cls, value_at_zero, slope) -> "PLCurve":
        return cls(((Fraction(0), to_rational(value_at_zero)),), Fraction(slope))

    @property
    def initial_value(self) -> Fraction:
        return self.breakpoints[0][1]

    @property
    def xs(self) -> list[Fraction]:
        return [x for x, _ in self.breakpoints]

    def slopes(self) -> list[Fraction]:
        """Slopes of the bounded segments followed by the tail slope."""
        pts = self.breakpoints
        out = [(y1 - y0) / (x1 - x0) for (x0, y0), (x1, y1) in zip(pts, pts[1:])]
        out.append(self.tail_slope)
        return out

    def __call__(self, lam) -> Fraction:
        lam = to_rational(lam)
        if lam < 0:
            raise ValueError("curves are defined for lambda >= 0")
        pts = self.breakpoints
        k = bisect_right(self.xs, lam) - 1
        x0, y0 = pts[k]
        if k == len(pts) - 1:
            return y0 + self.tail_slope * (lam - x0)
        x1, y1 = pts[k + 1]
        return y0 + (y1 - y0) * (lam - x0) / (x1 - x0)

    def to_dict(self) -> dict:
        return {
            "breakpoints": [[format_rational(x), format_rational(y)] for x, y in self.breakpoints],
            "tail_slope": format_rational(self.tail_slope),
        }

    def __str__(self) -> str:
        body = ", ".join(f"({format_rational(x)}, {format_rational(y)})" for x, y in self.breakpoints)
        return f"[{body}] then slope {format_rational(self.tail_slope)}"


def _slope(p: Point, q: Point) -> Fraction:
    return (q[1] - p[1]) / (q[0] - p[0])


def _simplify(points: list[Point], tail: Fraction) -> list[Point]:
    out: list[Point] = []
    for p in points:
        while len(out) >= 2 and _slope(out[-2], out[-1]) == _slope(out[-1], p):
            out.pop()
        out.append(p)
    if len(out) >= 2 and _slope(out[-2], out[-1]) == tail:
        out.pop()
    return out


def curve_eval(curve: PLCurve, lam) -> Fraction:
    return curve(lam)


def curve_equal(c1: PLCurve, c2: PLCurve) -> bool:
    """Equality of the functions; inputs need not be canonical."""
    return canonical(c1) == canonical(c2)


def canonical(c: PLCurve) -> PLCurve:
    return PLCurve.build(c.breakpoints, c.tail_slope)


def _combine(c1: PLCurve, c2: PLCurve, pick: Callable) -> PLCurve:
    xs = sorted(set(c1.xs) | set(c2.xs))
    candidates = set(xs)
    for a, b in zip(xs, xs[1:]):
        da, db = c1(a) - c2(a), c1(b) - c2(b)
        if da * db < 0:
            candidates.add(a + (b - a) * da / (da - db))
    last = xs[-1]
    d0 = c1(last) - c2(last)
    ds = c1.tail_slope - c2.tail_slope
    if d0 * ds < 0:
        candidates.add(last - d0 / ds)
    right = max(candidates)
    probe = right + 1
    v1, v2 = c1(probe), c2(probe)
    chosen = pick(v1, v2)
    if v1 == v2:
        tail = pick(c1.tail_slope, c2.tail_slope)
    else:
        tail = c1.tail_slope if chosen == v1 else c2.tail_slope
    points = [(x, pick(c1(x), c2(x))) for x in sorted(candidates)]
    return PLCurve.build(points, tail)


def pointwise_max(*curves: PLCurve) -> PLCurve:
    out = curves[0]
    for c in curves[1:]:
        out = _combine(out, c, max)
    return out


def pointwise_min(*curves: PLCurve) -> PLCurve:
    out = curves[0]
    for c in curves[1:]:
        out = _combine(out, c, min)
    return out


def sample(curve: PLCurve, grid: Iterable = ()) -> list[Point]:
    """``(lambda, value)`` rows at every breakpoint plus the extra ``grid`` points."""
    xs = set(curve.xs) | {to_rational(g) for g in grid}
    return [(x, curve(x)) for x in sorted(xs)]

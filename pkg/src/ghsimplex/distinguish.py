"""Deciding whether two finite spaces are at equal GH distance from every simplex.

Exact curve comparison for ``n = 1 .. max(#X, #Y)`` is the ground truth.  The
diameter test, the cardinality argument, the ultrametric spectrum test and the
M_n-set criterion are faster routes; when ``cross_check`` is on they are run
alongside the curve comparison and must agree with it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .curves import PLCurve
from .errors import InconsistentRoutes
from .extremal import m_set
from .metric import FiniteMetricSpace, format_rational, is_ultrametric
from .mst import spectrum
from .partitions import DEFAULT_CAP
from .simplex import gh_simplex_at, gh_simplex_curve


@dataclass(frozen=True)
class Witness:
    n: int
    lam: Fraction
    value_x: Fraction  # 2 d_GH(lam Delta_n, X)
    value_y: Fraction

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "lambda": format_rational(self.lam),
            "two_dgh_x": format_rational(self.value_x),
            "two_dgh_y": format_rational(self.value_y),
        }


@dataclass
class Verdict:
    indistinguishable: bool
    witness: Witness | None
    route: str
    trace: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "verdict": "indistinguishable" if self.indistinguishable else "distinguishable",
            "route": self.route,
            "witness": self.witness.to_dict() if self.witness else None,
            "trace": list(self.trace),
        }


def _witness(X, Y, n, lam, cap) -> Witness:
    vx = gh_simplex_at(X, n, lam, cap=cap)
    vy = gh_simplex_at(Y, n, lam, cap=cap)
    if vx == vy:
        raise InconsistentRoutes(f"claimed witness n={n}, lambda={lam} does not separate the spaces")
    return Witness(n, Fraction(lam), vx, vy)


def first_difference(c1: PLCurve, c2: PLCurve):
    """Smallest breakpoint (of either curve) where the curves differ, or ``None`` if equal."""
    xs = sorted(set(c1.xs) | set(c2.xs))
    for x in xs:
        if c1(x) != c2(x):
            return x
    if c1.tail_slope != c2.tail_slope:
        return xs[-1] + 1
    return None


def curves_route(X, Y, cap=DEFAULT_CAP, trace=None):
    """Compare curves for every relevant ``n``; returns ``(equal, n, lam)``."""
    top = max(X.m, Y.m)
    for n in range(1, top + 1):
        cx = gh_simplex_curve(X, n, cap=cap)
        cy = gh_simplex_curve(Y, n, cap=cap)
        lam = first_difference(cx, cy)
        if lam is not None:
            if trace is not None:
                trace.append(f"curves differ at n={n}, first at lambda={format_rational(lam)}")
            return False, n, lam
        if trace is not None:
            trace.append(f"curves agree at n={n}")
    return True, None, None


def m_criterion(X, Y, cap=DEFAULT_CAP) -> bool:
    """Equal diameters and equal M_n for every ``2 <= n <= #X``; needs ``#X == #Y``."""
    if X.m != Y.m:
        raise ValueError("the M-set criterion compares spaces of equal cardinality")
    if X.diameter != Y.diameter:
        return False
    return all(m_set(X, n, cap) == m_set(Y, n, cap) for n in range(2, X.m + 1))


def indistinguishable(X: FiniteMetricSpace, Y: FiniteMetricSpace, *, cap: int | None = DEFAULT_CAP,
                      cross_check: bool = True) -> Verdict:
    trace: list[str] = []
    dx, dy = X.diameter, Y.diameter
    trace.append(f"diam X = {format_rational(dx)}, diam Y = {format_rational(dy)}")
    if dx != dy:
        return Verdict(False, _witness(X, Y, 1, 0, cap), "diameter", trace)

    if X.m != Y.m:
        trace.append(f"#X = {X.m}, #Y = {Y.m}")
        n = max(X.m, Y.m)
        lam = 2 * dx
        w = _witness(X, Y, n, lam, cap)
        big = X if X.m > Y.m else Y
        sigma_last = spectrum(big).sigma[n - 2]
        small_val, big_val = (w.value_y, w.value_x) if big is X else (w.value_x, w.value_y)
        if small_val != lam or big_val != lam - sigma_last:
            raise InconsistentRoutes("cardinality witness disagrees with the closed forms")
        return Verdict(False, w, "cardinality", trace)

    route = "curves"
    verdict = None
    if X.m >= 2 and is_ultrametric(X) and is_ultrametric(Y):
        sx, sy = spectrum(X).sigma, spectrum(Y).sigma
        trace.append(f"both ultrametric; spectra {_fmt_seq(sx)} and {_fmt_seq(sy)}")
        route = "ultrametric-spectrum"
        diff = [k for k in range(1, X.m) if sx[k - 1] != sy[k - 1]]
        if diff:
            k = diff[0]
            verdict = Verdict(False, _witness(X, Y, k + 1, 2 * dx, cap), route, trace)
        else:
            verdict = Verdict(True, None, route, trace)
        if not cross_check:
            return verdict

    equal, n, lam = curves_route(X, Y, cap, trace)
    curve_verdict = Verdict(equal, None if equal else _witness(X, Y, n, lam, cap), "curves", trace)
    if verdict is not None and verdict.indistinguishable != curve_verdict.indistinguishable:
        raise InconsistentRoutes("spectrum route and curve route disagree")
    if cross_check:
        by_m = m_criterion(X, Y, cap)
        trace.append(f"M-set criterion: {'equal' if by_m else 'different'}")
        if by_m != equal:
            raise InconsistentRoutes("M-set criterion and curve route disagree")
    if verdict is not None:
        verdict.trace = trace
        return verdict
    return curve_verdict


def _fmt_seq(seq) -> str:
    return "(" + ", ".join(format_rational(q) for q in seq) + ")"


def distinguishability_report(X: FiniteMetricSpace, Y: FiniteMetricSpace, *,
                              cap: int | None = DEFAULT_CAP) -> dict:
    """Everything the decision looked at, as a JSON-ready dict."""
    verdict = indistinguishable(X, Y, cap=cap)
    top = max(X.m, Y.m)
    per_n = []
    for n in range(1, top + 1):
        cx = gh_simplex_curve(X, n, cap=cap)
        cy = gh_simplex_curve(Y, n, cap=cap)
        row = {"n": n, "equal": cx == cy, "curve_x": cx.to_dict(), "curve_y": cy.to_dict()}
        if 2 <= n <= min(X.m, Y.m):
            row["M_x"] = m_set(X, n, cap).to_dict()
            row["M_y"] = m_set(Y, n, cap).to_dict()
        per_n.append(row)

    def spec_of(Z):
        return [format_rational(q) for q in spectrum(Z).sigma] if Z.m >= 2 else []

    return {
        "diameters": [format_rational(X.diameter), format_rational(Y.diameter)],
        "cardinalities": [X.m, Y.m],
        "ultrametric": [is_ultrametric(X), is_ultrametric(Y)],
        "spectra": [spec_of(X), spec_of(Y)],
        "equal_distance_multisets": X.distance_multiset() == Y.distance_multiset(),
        "distance_multisets": [
            [format_rational(q) for q in X.distance_multiset()],
            [format_rational(q) for q in Y.distance_multiset()],
        ],
        "per_n": per_n,
        **verdict.to_dict(),
    }


def report_markdown(report: dict, names=("X", "Y")) -> str:
    a, b = names
    lines = [f"# Distinguishability: {a} vs {b}", ""]
    lines.append(f"**Verdict:** {report['verdict']} (route: {report['route']})")
    if report["witness"]:
        w = report["witness"]
        lines.append(
            f"**Witness:** n={w['n']}, lambda={w['lambda']}: "
            f"2d_GH = {w['two_dgh_x']} vs {w['two_dgh_y']}"
        )
    lines += ["", "| | " + a + " | " + b + " |", "|---|---|---|"]
    lines.append(f"| diameter | {report['diameters'][0]} | {report['diameters'][1]} |")
    lines.append(f"| cardinality | {report['cardinalities'][0]} | {report['cardinalities'][1]} |")
    lines.append(f"| ultrametric | {report['ultrametric'][0]} | {report['ultrametric'][1]} |")
    lines.append(
        f"| mst-spectrum | ({', '.join(report['spectra'][0])}) | ({', '.join(report['spectra'][1])}) |"
    )
    lines.append(
        f"| distances | {' '.join(report['distance_multisets'][0])} | "
        f"{' '.join(report['distance_multisets'][1])} |"
    )
    lines += ["", "## Curves 2d_GH(lambda Delta_n, .)", ""]
    for row in report["per_n"]:
        mark = "equal" if row["equal"] else "DIFFERENT"
        lines.append(f"- n={row['n']}: {mark}")
        lines.append(f"  - {a}: {_curve_text(row['curve_x'])}")
        lines.append(f"  - {b}: {_curve_text(row['curve_y'])}")
        if "M_x" in row:
            lines.append(f"  - M_n({a}) = {_pts(row['M_x']['M'])} [{row['M_x']['case_tag']}]")
            lines.append(f"  - M_n({b}) = {_pts(row['M_y']['M'])} [{row['M_y']['case_tag']}]")
    lines += ["", "## Trace", ""]
    lines += [f"- {t}" for t in report["trace"]]
    return "\n".join(lines) + "\n"


def _curve_text(c: dict) -> str:
    pts = ", ".join(f"({x}, {y})" for x, y in c["breakpoints"])
    return f"{pts}; tail slope {c['tail_slope']}"


def _pts(ps) -> str:
    return "{" + ", ".join(f"({x}, {y})" for x, y in ps) + "}"

"""Brute-force Gromov-Hausdorff distance between small finite spaces.

``2 d_GH(X, Y)`` is the least distortion of a correspondence between ``X``
and ``Y``.  Dropping pairs never increases distortion, so it suffices to
search correspondences made of a map ``f: X -> Y`` together with a partner
in ``X`` for every point of ``Y`` missed by ``f``.  The search runs depth
first and abandons a branch as soon as its distortion reaches the best
complete correspondence found so far.

This is a test instrument: it is exponential and guarded by a cap on
``#X * #Y``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import CapExceeded, DimensionMismatch
from .metric import FiniteMetricSpace, common_scale, integer_matrix

DEFAULT_ORACLE_CAP = 20


@dataclass(frozen=True)
class Correspondence:
    p: int
    q: int
    pairs: frozenset[tuple[int, int]]

    def __post_init__(self):
        rows = {x for x, _ in self.pairs}
        cols = {y for _, y in self.pairs}
        if rows != set(range(self.p)) or cols != set(range(self.q)):
            raise ValueError("a correspondence must project onto both factors")

    @classmethod
    def from_matrix(cls, rel) -> "Correspondence":
        rel = [list(r) for r in rel]
        p, q = len(rel), len(rel[0]) if rel else 0
        return cls(p, q, frozenset((i, j) for i in range(p) for j in range(q) if rel[i][j]))

    def matrix(self) -> list[list[bool]]:
        return [[(i, j) in self.pairs for j in range(self.q)] for i in range(self.p)]


def distortion(R: Correspondence, X: FiniteMetricSpace, Y: FiniteMetricSpace) -> Fraction:
    if (R.p, R.q) != (X.m, Y.m):
        raise DimensionMismatch(f"relation is {R.p}x{R.q}, spaces have {X.m} and {Y.m} points")
    pairs = sorted(R.pairs)
    return max(
        abs(X.dist[x][x2] - Y.dist[y][y2])
        for x, y in pairs
        for x2, y2 in pairs
    )


def brute_gh_witness(X: FiniteMetricSpace, Y: FiniteMetricSpace,
                     cap: int | None = DEFAULT_ORACLE_CAP) -> tuple[Fraction, Correspondence]:
    """Least distortion (``2 d_GH``) and one correspondence attaining it."""
    p, q = X.m, Y.m
    if cap is not None and p * q > cap:
        raise CapExceeded(p, q, q**p * p**q, cap)
    L = common_scale([X, Y])
    dx = integer_matrix(X, L).tolist()
    dy = integer_matrix(Y, L).tolist()

    # the full relation X x Y is always a correspondence
    best = max(max(max(r) for r in dx), max(max(r) for r in dy))
    best_pairs = [(x, y) for x in range(p) for y in range(q)]
    chosen: list[tuple[int, int]] = []
    hits = [0] * q

    def extend(x: int, y: int, cur: int) -> int:
        worst = cur
        rx, ry = dx[x], dy[y]
        for a, b in chosen:
            c = rx[a] - ry[b]
            if c < 0:
                c = -c
            if c > worst:
                worst = c
                if worst >= best:
                    break
        return worst

    def cover_rest(missing: list[int], k: int, cur: int) -> None:
        nonlocal best, best_pairs
        if k == len(missing):
            best, best_pairs = cur, list(chosen)
            return
        y = missing[k]
        for x in range(p):
            new = extend(x, y, cur)
            if new < best:
                chosen.append((x, y))
                cover_rest(missing, k + 1, new)
                chosen.pop()

    def assign(x: int, cur: int) -> None:
        if x == p:
            cover_rest([y for y in range(q) if not hits[y]], 0, cur)
            return
        for y in range(q):
            new = extend(x, y, cur)
            if new < best:
                chosen.append((x, y))
                hits[y] += 1
                assign(x + 1, new)
                hits[y] -= 1
                chosen.pop()

    assign(0, 0)
    return Fraction(best, L), Correspondence(p, q, frozenset(best_pairs))


def brute_gh(X: FiniteMetricSpace, Y: FiniteMetricSpace, cap: int | None = DEFAULT_ORACLE_CAP) -> Fraction:
    """``2 d_GH(X, Y)`` by exhaustive search over correspondences."""
    return brute_gh_witness(X, Y, cap)[0]

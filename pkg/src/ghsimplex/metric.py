"""Exact finite metric spaces.

Distances are :class:`fractions.Fraction` values.  ``INF`` stands in for the
extended value used by the one-block partition (its ``alpha`` is infinite);
``Fraction`` compares correctly against ``math.inf`` so no wrapper type is
needed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    Asymmetric,
    NegativeEntry,
    NonzeroDiagonal,
    NotSquare,
    ParseError,
    TriangleViolation,
    ZeroDistance,
)

INF = math.inf

# Scaled integer matrices stay in int64 below this bound; sums of two entries
# must not overflow.
_INT64_SAFE = 2**61


def to_rational(value) -> Fraction:
    """Parse ``value`` into an exact rational.

    Accepts ints, Fractions, ``"p/q"`` strings and decimal strings.  Floats
    are read through their shortest decimal repr, so ``0.1`` becomes 1/10.
    """
    if isinstance(value, bool):
        raise ParseError(f"not a rational: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ParseError(f"not a finite rational: {value!r}")
        return Fraction(repr(value))
    if isinstance(value, str):
        text = value.strip()
        try:
            q = Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"not a rational: {value!r}") from exc
        return q
    raise ParseError(f"not a rational: {value!r}")


def format_rational(q) -> str:
    """``"p/q"`` (or ``"p"`` for integers, ``"inf"`` for infinity)."""
    if q == INF:
        return "inf"
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class FiniteMetricSpace:
    """A labelled finite metric space with an exact distance matrix.

    Build instances with :func:`validate` (or the helpers in this module);
    the constructor itself performs no checks.
    """

    labels: tuple[str, ...]
    dist: tuple[tuple[Fraction, ...], ...]

    def __len__(self) -> int:
        return len(self.labels)

    @property
    def m(self) -> int:
        return len(self.labels)

    def d(self, i: int, j: int) -> Fraction:
        return self.dist[i][j]

    def pairs(self):
        return combinations(range(self.m), 2)

    @cached_property
    def diameter(self) -> Fraction:
        return max((self.dist[i][j] for i, j in self.pairs()), default=Fraction(0))

    @cached_property
    def scaled(self) -> tuple[np.ndarray, int]:
        """Integer matrix ``L * dist`` and the common denominator ``L``."""
        return _scale_to_integers([self.dist])[0]

    def distance_multiset(self) -> list[Fraction]:
        return sorted(self.dist[i][j] for i, j in self.pairs())

    def relabel(self, order: Sequence[int]) -> "FiniteMetricSpace":
        """The same space with points listed in ``order`` (an isometric copy)."""
        labels = tuple(self.labels[k] for k in order)
        dist = tuple(tuple(self.dist[a][b] for b in order) for a in order)
        return FiniteMetricSpace(labels, dist)

    def __repr__(self) -> str:
        rows = "; ".join(" ".join(format_rational(x) for x in row) for row in self.dist)
        return f"FiniteMetricSpace({list(self.labels)}, [{rows}])"


def common_scale(spaces: Iterable[FiniteMetricSpace], extra: Iterable[Fraction] = ()) -> int:
    """Least common multiple of all denominators involved."""
    lcm = 1
    for X in spaces:
        for row in X.dist:
            for q in row:
                lcm = math.lcm(lcm, q.denominator)
    for q in extra:
        lcm = math.lcm(lcm, Fraction(q).denominator)
    return lcm


def _scale_to_integers(matrices, scale: int | None = None):
    if scale is None:
        scale = 1
        for mat in matrices:
            for row in mat:
                for q in row:
                    scale = math.lcm(scale, q.denominator)
    out = []
    for mat in matrices:
        ints = [[q.numerator * (scale // q.denominator) for q in row] for row in mat]
        peak = max((max(row) for row in ints if row), default=0)
        dtype = np.int64 if peak < _INT64_SAFE else object
        out.append((np.array(ints, dtype=dtype).reshape(len(ints), len(ints)), scale))
    return out


def integer_matrix(X: FiniteMetricSpace, scale: int) -> np.ndarray:
    """``scale * dist(X)`` as an integer array; ``scale`` must clear all denominators."""
    return _scale_to_integers([X.dist], scale)[0][0]


def validate(matrix, labels: Sequence[str] | None = None) -> FiniteMetricSpace:
    """Check the metric axioms and return the space.

    Raises the exception for the first violated axiom, in the order: shape,
    negativity, diagonal, symmetry, distinct points at distance zero, and the
    triangle inequality (first offending ``(i, j, k)`` in lexicographic
    order, meaning ``d(i,k) > d(i,j) + d(j,k)``).
    """
    rows = [list(r) for r in matrix]
    m = len(rows)
    if m == 0:
        raise NotSquare("empty matrix")
    if any(len(r) != m for r in rows):
        raise NotSquare(f"matrix is not square ({m} rows, row lengths {[len(r) for r in rows]})")
    if labels is None:
        labels = [f"x{i}" for i in range(m)]
    labels = tuple(str(s) for s in labels)
    if len(labels) != m:
        raise NotSquare(f"{len(labels)} labels for a {m}x{m} matrix")
    if len(set(labels)) != m:
        raise ParseError("point labels must be distinct")

    dist = [[to_rational(v) for v in r] for r in rows]
    for i in range(m):
        for j in range(m):
            if dist[i][j] < 0:
                raise NegativeEntry(i, j, dist[i][j])
    for i in range(m):
        if dist[i][i] != 0:
            raise NonzeroDiagonal(i, dist[i][i])
    for i, j in combinations(range(m), 2):
        if dist[i][j] != dist[j][i]:
            raise Asymmetric(i, j)
    for i, j in combinations(range(m), 2):
        if dist[i][j] == 0:
            raise ZeroDistance(i, j)

    X = FiniteMetricSpace(labels, tuple(tuple(r) for r in dist))
    bad = _first_triangle_violation(X)
    if bad is not None:
        raise TriangleViolation(*bad)
    return X


def _first_triangle_violation(X: FiniteMetricSpace):
    if X.m < 3:
        return None
    D, _ = X.scaled
    # viol[i, j, k] is d(i,k) > d(i,j) + d(j,k)
    viol = D[:, None, :] > D[:, :, None] + D[None, :, :]
    hits = np.argwhere(viol)
    if len(hits) == 0:
        return None
    i, j, k = (int(v) for v in hits[0])
    return i, j, k


def diameter(X: FiniteMetricSpace) -> Fraction:
    return X.diameter


def is_ultrametric(X: FiniteMetricSpace) -> bool:
    if X.m < 3:
        return True
    D, _ = X.scaled
    lhs = D[:, None, :]
    rhs = np.maximum(D[:, :, None], D[None, :, :])
    return not bool(np.any(lhs > rhs))


def make_simplex(n: int, lam=1) -> FiniteMetricSpace:
    """The simplex ``lam * Delta_n``; collapses to a single point when ``lam == 0``."""
    if n < 1:
        raise ValueError("simplex cardinality must be positive")
    lam = to_rational(lam)
    if lam < 0:
        raise ValueError("simplex scale must be nonnegative")
    if lam == 0:
        n = 1
    labels = tuple(f"s{i}" for i in range(n))
    dist = tuple(tuple(Fraction(0) if i == j else lam for j in range(n)) for i in range(n))
    return FiniteMetricSpace(labels, dist)


def scale(X: FiniteMetricSpace, c) -> FiniteMetricSpace:
    """Multiply every distance by ``c``; ``c == 0`` gives the one-point space."""
    c = to_rational(c)
    if c < 0:
        raise ValueError("scale factor must be nonnegative")
    if c == 0:
        return FiniteMetricSpace((X.labels[0],), ((Fraction(0),),))
    return FiniteMetricSpace(X.labels, tuple(tuple(c * q for q in row) for row in X.dist))


def from_pairs(labels: Sequence[str], distances: dict) -> FiniteMetricSpace:
    """Build and validate a space from ``{(a, b): distance}`` keyed by labels."""
    idx = {s: k for k, s in enumerate(labels)}
    m = len(labels)
    mat = [[Fraction(0)] * m for _ in range(m)]
    for (a, b), v in distances.items():
        i, j = idx[a], idx[b]
        mat[i][j] = mat[j][i] = to_rational(v)
    return validate(mat, labels)


def triangle_space(a, b, c, labels=("p", "q", "r")) -> FiniteMetricSpace:
    """Three points with ``|pq| = a``, ``|pr| = b``, ``|qr| = c``."""
    p, q, r = labels
    return from_pairs(labels, {(p, q): a, (p, r): b, (q, r): c})

"""Partitions into parts of strictly smaller diameter.

For a finite space there are finitely many block diameters, so "strictly
smaller by some epsilon" is just ``diam D < diam X``.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import LambdaOutOfRange
from .metric import FiniteMetricSpace, to_rational
from .partitions import DEFAULT_CAP, Partition, ad_table
from .simplex import gh_simplex_at


def borsuk_direct(X: FiniteMetricSpace, n: int, cap: int | None = DEFAULT_CAP) -> tuple[bool, Partition | None]:
    """Whether some partition into ``n`` blocks has all blocks of smaller diameter, with a witness."""
    if not 1 <= n <= X.m:
        raise ValueError(f"need 1 <= n <= #X, got n={n}, #X={X.m}")
    best = None
    for (_, d), part in ad_table(X, n, cap):
        if d < X.diameter and (best is None or d < best[0]):
            best = (d, part)
    if best is None:
        return False, None
    return True, best[1]


def borsuk_via_gh(X: FiniteMetricSpace, n: int, lam, cap: int | None = DEFAULT_CAP) -> bool:
    """``2 d_GH(lam Delta_n, X) < diam X`` for any ``0 < lam < diam X``."""
    lam = to_rational(lam)
    if not 0 < lam < X.diameter:
        raise LambdaOutOfRange(f"need 0 < lambda < diam X = {X.diameter}, got {lam}")
    if not 1 <= n <= X.m:
        raise ValueError(f"need 1 <= n <= #X, got n={n}, #X={X.m}")
    return gh_simplex_at(X, n, lam, cap=cap) < X.diameter


def default_lambda(X: FiniteMetricSpace) -> Fraction:
    return X.diameter / 2

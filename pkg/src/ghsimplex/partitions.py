"""Set partitions and the (alpha, diam) statistics of partitions.

A partition of ``{0, ..., m-1}`` is stored as a restricted-growth string:
``rgs[i]`` is the block of point ``i`` and blocks are numbered in order of
first use.  For a partition ``D`` of a space ``X``:

* ``diam D`` is the largest diameter of a block (0 for singletons);
* ``alpha(D)`` is the smallest distance between points of different blocks,
  and infinite for the one-block partition.

Statistics over all partitions into ``n`` blocks are computed in bulk on
integer-scaled distance matrices, so the results stay exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterator

import numpy as np

from .errors import BlockMismatch, CapExceeded
from .metric import INF, FiniteMetricSpace

DEFAULT_CAP = 14


@lru_cache(maxsize=None)
def stirling2(m: int, n: int) -> int:
    """Stirling number of the second kind."""
    if m == n:
        return 1
    if n == 0 or n > m:
        return 0
    return n * stirling2(m - 1, n) + stirling2(m - 1, n - 1)


@dataclass(frozen=True)
class Partition:
    rgs: tuple[int, ...]
    n: int

    @classmethod
    def from_blocks(cls, blocks, m: int | None = None) -> "Partition":
        """Canonical partition from an iterable of index blocks."""
        blocks = [sorted(b) for b in blocks if b]
        if m is None:
            m = sum(len(b) for b in blocks)
        owner = [-1] * m
        for k, b in enumerate(blocks):
            for i in b:
                if not 0 <= i < m or owner[i] != -1:
                    raise BlockMismatch(f"blocks do not partition range({m})")
                owner[i] = k
        if -1 in owner:
            raise BlockMismatch(f"blocks do not cover range({m})")
        relabel: dict[int, int] = {}
        rgs = tuple(relabel.setdefault(b, len(relabel)) for b in owner)
        return cls(rgs, len(blocks))

    @property
    def m(self) -> int:
        return len(self.rgs)

    def blocks(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.n)]
        for i, b in enumerate(self.rgs):
            out[b].append(i)
        return out

    def notation(self, labels=None) -> str:
        """Block notation such as ``{p,q}{r}``."""
        parts = []
        for block in self.blocks():
            names = [str(labels[i]) if labels else str(i) for i in block]
            parts.append("{" + ",".join(names) + "}")
        return "".join(parts)


@dataclass(frozen=True)
class PartitionStats:
    alpha: object  # Fraction, or INF for a single block
    diam: Fraction


def _check_cap(m: int, n: int, cap: int | None) -> None:
    if cap is not None and m > cap:
        raise CapExceeded(m, n, stirling2(m, n), cap)


def _rgs_exact(m: int, n: int) -> Iterator[tuple[int, ...]]:
    rgs = [0] * m

    def rec(i: int, used: int):
        if i == m:
            if used == n:
                yield tuple(rgs)
            return
        remaining = m - i
        top = min(used, n - 1)
        for v in range(top + 1):
            new_used = used + (v == used)
            if n - new_used > remaining - 1:
                continue
            rgs[i] = v
            yield from rec(i + 1, new_used)

    if 1 <= n <= m:
        rgs[0] = 0
        yield from rec(1, 1)


def enumerate_partitions(m: int, n: int, cap: int | None = DEFAULT_CAP) -> Iterator[Partition]:
    """All partitions of ``range(m)`` into exactly ``n`` blocks, lexicographic in rgs."""
    if not 1 <= n <= m:
        raise ValueError(f"need 1 <= n <= m, got m={m}, n={n}")
    _check_cap(m, n, cap)
    for rgs in _rgs_exact(m, n):
        yield Partition(rgs, n)


@lru_cache(maxsize=64)
def _table(m: int, n: int):
    rgs = np.array(list(_rgs_exact(m, n)), dtype=np.int8).reshape(-1, m)
    pairs = list(combinations(range(m), 2))
    if pairs:
        ii = np.array([p[0] for p in pairs])
        jj = np.array([p[1] for p in pairs])
        within = rgs[:, ii] == rgs[:, jj]
    else:
        within = np.zeros((len(rgs), 0), dtype=bool)
    rgs.setflags(write=False)
    within.setflags(write=False)
    return rgs, within, pairs


def stats(X: FiniteMetricSpace, D: Partition) -> PartitionStats:
    if D.m != X.m:
        raise BlockMismatch(f"partition of {D.m} points applied to a {X.m}-point space")
    diam = Fraction(0)
    alpha = INF
    for i, j in X.pairs():
        dij = X.dist[i][j]
        if D.rgs[i] == D.rgs[j]:
            diam = max(diam, dij)
        else:
            alpha = min(alpha, dij)
    return PartitionStats(alpha, diam)


def ad_arrays(X: FiniteMetricSpace, n: int, cap: int | None = DEFAULT_CAP):
    """Scaled ``(alpha, diam)`` arrays over every partition into ``n >= 2`` blocks.

    Returns ``(alpha, diam, scale, rgs)`` where the first two are integer
    arrays equal to ``scale`` times the true values and ``rgs`` lists the
    partitions in the same order.
    """
    m = X.m
    if not 2 <= n <= m:
        raise ValueError(f"need 2 <= n <= m, got m={m}, n={n}")
    _check_cap(m, n, cap)
    rgs, within, pairs = _table(m, n)
    Dm, L = X.scaled
    dvec = np.array([Dm[i, j] for i, j in pairs], dtype=Dm.dtype)
    zero = Dm.dtype.type(0) if Dm.dtype != object else 0
    big = (int(dvec.max()) + 1) if len(dvec) else 1
    diam = np.where(within, dvec, zero).max(axis=1)
    alpha = np.where(within, big, dvec).min(axis=1)
    return alpha, diam, L, rgs


def ad_table(X: FiniteMetricSpace, n: int, cap: int | None = DEFAULT_CAP):
    """Distinct ``(alpha, diam)`` pairs with the first partition attaining each.

    Sorted by ``(alpha, diam)``.  For ``n == 1`` the single entry has infinite
    alpha.
    """
    if n == 1:
        return [((INF, X.diameter), Partition((0,) * X.m, 1))]
    alpha, diam, L, rgs = ad_arrays(X, n, cap)
    seen: dict[tuple[int, int], int] = {}
    if alpha.dtype != object and int(alpha.max()) < 2**31 and int(diam.max()) < 2**31:
        keys = alpha.astype(np.int64) * (int(diam.max()) + 1) + diam
        _, first = np.unique(keys, return_index=True)
        for k in first.tolist():
            seen[(int(alpha[k]), int(diam[k]))] = k
    else:
        for k, key in enumerate(zip(alpha.tolist(), diam.tolist())):
            seen.setdefault(key, k)
    rows = []
    for (a, d), k in sorted(seen.items()):
        rows.append(((Fraction(a, L), Fraction(d, L)), Partition(tuple(int(v) for v in rgs[k]), n)))
    return rows


def ad_set(X: FiniteMetricSpace, n: int, cap: int | None = DEFAULT_CAP) -> frozenset:
    """The finite set of ``(alpha(D), diam D)`` over partitions into ``n`` blocks."""
    return frozenset(pt for pt, _ in ad_table(X, n, cap))


def pareto_front(points) -> list[tuple]:
    """Points not dominated by another with larger-or-equal alpha and smaller-or-equal d.

    Returned in increasing alpha (and therefore increasing d).
    """
    front = []
    best_d = None
    for a, d in sorted(set(points), key=lambda p: (-p[0], p[1])):
        if best_d is None or d < best_d:
            front.append((a, d))
            best_d = d
    front.reverse()
    return front


def extremes(X: FiniteMetricSpace, n: int, cap: int | None = DEFAULT_CAP):
    """``(alpha_minus, alpha_plus, d_minus, d_plus)`` over partitions into ``n`` blocks."""
    if not 1 <= n <= X.m:
        raise ValueError(f"need 1 <= n <= m, got m={X.m}, n={n}")
    if n == 1:
        return INF, INF, X.diameter, X.diameter
    alpha, diam, L, _ = ad_arrays(X, n, cap)
    return (
        Fraction(int(alpha.min()), L),
        Fraction(int(alpha.max()), L),
        Fraction(int(diam.min()), L),
        Fraction(int(diam.max()), L),
    )


def alpha_n(X: FiniteMetricSpace, n: int, cap: int | None = DEFAULT_CAP):
    """Largest ``alpha(D)`` over partitions into ``n`` blocks; 0 once ``n`` exceeds ``#X``."""
    if n > X.m:
        return Fraction(0)
    return extremes(X, n, cap)[1]


def alpha_profile(X: FiniteMetricSpace, cap: int | None = DEFAULT_CAP) -> dict[int, object]:
    """``n -> alpha_n(X)`` for ``n = 1..#X``; every larger ``n`` maps to 0."""
    return {n: extremes(X, n, cap)[1] for n in range(1, X.m + 1)}


def d_profile(X: FiniteMetricSpace, cap: int | None = DEFAULT_CAP):
    """``(n -> d_n(X), n -> thresholded d_n(X))`` for ``n = 1..#X``.

    The thresholded profile zeroes every value below ``diam X / 2``.  Both
    maps are 0 for ``n > #X``.
    """
    half = X.diameter / 2
    full = {n: extremes(X, n, cap)[2] for n in range(1, X.m + 1)}
    halved = {n: (v if v >= half else Fraction(0)) for n, v in full.items()}
    return full, halved

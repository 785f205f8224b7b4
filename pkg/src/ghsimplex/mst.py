"""Minimal spanning trees and the mst-spectrum of a finite metric space."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import IndexOutOfRange, LambdaTooSmall, TooSmall
from .metric import FiniteMetricSpace, to_rational
from .partitions import DEFAULT_CAP, alpha_profile


@dataclass(frozen=True)
class MstSpectrum:
    sigma: tuple[Fraction, ...]  # descending
    tree_edges: tuple[tuple[int, int], ...]


class _DisjointSets:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, a: int) -> int:
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[rb] = ra
        return True


def spectrum(X: FiniteMetricSpace, edge_order: Sequence[tuple[int, int]] | None = None) -> MstSpectrum:
    """Kruskal on the complete graph of ``X``.

    Equal-length edges are taken in lexicographic index order unless
    ``edge_order`` supplies another tie-breaking order (any permutation of
    the pairs ``i < j``).  The spectrum does not depend on it; the tree may.
    """
    if X.m < 2:
        raise TooSmall("the mst-spectrum needs at least two points")
    edges = list(edge_order) if edge_order is not None else list(X.pairs())
    rank = {e: k for k, e in enumerate(edges)}
    edges.sort(key=lambda e: (X.dist[e[0]][e[1]], rank[e]))
    ds = _DisjointSets(X.m)
    tree = []
    for i, j in edges:
        if ds.union(i, j):
            tree.append((i, j))
            if len(tree) == X.m - 1:
                break
    sigma = tuple(sorted((X.dist[i][j] for i, j in tree), reverse=True))
    return MstSpectrum(sigma, tuple(tree))


def gh_via_spectrum(X: FiniteMetricSpace, k: int, lam) -> Fraction:
    """Twice the GH distance from ``lam * Delta_{k+1}`` to ``X`` when ``lam >= 2 diam X``."""
    lam = to_rational(lam)
    if not 1 <= k <= X.m - 1:
        raise IndexOutOfRange(f"k must lie in 1..{X.m - 1}, got {k}")
    if lam < 2 * X.diameter:
        raise LambdaTooSmall(f"lambda={lam} is below 2*diam={2 * X.diameter}")
    return lam - spectrum(X).sigma[k - 1]


@dataclass(frozen=True)
class SpectrumAlphaReport:
    sigma: tuple[Fraction, ...]
    alphas: tuple[Fraction, ...]  # alpha_{k+1}(X) for k = 1..m-1
    mismatches: tuple[int, ...]

    @property
    def ok(self) -> bool:
        return not self.mismatches


def spectrum_alpha_check(X: FiniteMetricSpace, cap: int | None = DEFAULT_CAP) -> SpectrumAlphaReport:
    """Compare ``sigma_k`` with ``alpha_{k+1}(X)`` for every ``k``."""
    sigma = spectrum(X).sigma
    prof = alpha_profile(X, cap)
    alphas = tuple(prof[k + 1] for k in range(1, X.m))
    bad = tuple(k for k in range(1, X.m) if sigma[k - 1] != alphas[k - 1])
    return SpectrumAlphaReport(sigma, alphas, bad)

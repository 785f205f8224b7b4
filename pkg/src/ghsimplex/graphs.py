"""Two-distance spaces, chromatic numbers and clique covering numbers.

Given ``0 < a < b <= 2a`` every symmetric function taking the values ``a``
and ``b`` off the diagonal is a metric.  A graph ``G`` becomes such a space
in two ways:

* chromatic convention: adjacent vertices at distance ``b``, others at ``a``;
* clique convention: adjacent vertices at distance ``a``, others at ``b``.

In the chromatic convention ``gamma(G) = m + 1`` where ``m`` is the largest
positive integer with ``2 d_GH(a Delta_m, V) = b``; the clique convention
gives ``theta(G)`` the same way.  When no such ``m`` exists we take
``m = 0`` (the graph is edgeless, resp. complete, and needs one colour,
resp. one clique).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterator

from .errors import BadParams, CapExceeded, NotTwoDistance, ParseError
from .metric import FiniteMetricSpace, to_rational, validate
from .partitions import DEFAULT_CAP
from .simplex import gh_simplex_at

DEFAULT_COLORING_CAP = 12


@dataclass(frozen=True)
class SimpleGraph:
    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise ValueError(f"bad edge {(u, v)} for a graph on {self.n} vertices")

    @classmethod
    def from_edges(cls, n: int, edges) -> "SimpleGraph":
        norm = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            norm.add((min(u, v), max(u, v)))
        return cls(n, frozenset(norm))

    def adjacent(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def neighbours(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def complement(self) -> "SimpleGraph":
        every = set(combinations(range(self.n), 2))
        return SimpleGraph(self.n, frozenset(every - self.edges))


@dataclass(frozen=True)
class ABParams:
    a: Fraction
    b: Fraction

    def __post_init__(self):
        a, b = to_rational(self.a), to_rational(self.b)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        if not (0 < a < b <= 2 * a):
            raise BadParams(f"need 0 < a < b <= 2a, got a={a}, b={b}")


def cycle(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> SimpleGraph:
    return SimpleGraph(n, frozenset(combinations(range(n), 2)))


def petersen() -> SimpleGraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return SimpleGraph.from_edges(10, outer + spokes + inner)


def all_graphs(n: int) -> Iterator[SimpleGraph]:
    """Every labelled simple graph on ``n`` vertices (all edge subsets)."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield SimpleGraph(n, frozenset(p for k, p in enumerate(pairs) if mask >> k & 1))


def _two_distance_space(G: SimpleGraph, on_edge: Fraction, off_edge: Fraction) -> FiniteMetricSpace:
    if G.n < 1:
        raise ValueError("graph has no vertices")
    mat = [[Fraction(0)] * G.n for _ in range(G.n)]
    for u, v in combinations(range(G.n), 2):
        mat[u][v] = mat[v][u] = on_edge if G.adjacent(u, v) else off_edge
    return validate(mat, [f"v{i}" for i in range(G.n)])


def graph_to_chromatic_space(G: SimpleGraph, p: ABParams) -> FiniteMetricSpace:
    return _two_distance_space(G, p.b, p.a)


def graph_to_clique_space(G: SimpleGraph, p: ABParams) -> FiniteMetricSpace:
    return _two_distance_space(G, p.a, p.b)


def space_to_graphs(X: FiniteMetricSpace) -> tuple[SimpleGraph, SimpleGraph, ABParams]:
    """``(G_X, H_X, (a, b))``: edges at distance ``b``, resp. at distance ``a``."""
    values = sorted({X.dist[i][j] for i, j in X.pairs()})
    if len(values) != 2:
        raise NotTwoDistance(f"expected exactly two nonzero distances, found {len(values)}")
    p = ABParams(*values)
    g_edges = [(i, j) for i, j in X.pairs() if X.dist[i][j] == p.b]
    h_edges = [(i, j) for i, j in X.pairs() if X.dist[i][j] == p.a]
    return SimpleGraph(X.m, frozenset(g_edges)), SimpleGraph(X.m, frozenset(h_edges)), p


def _largest_m_hitting_b(V: FiniteMetricSpace, p: ABParams, cap) -> int:
    # for m > #V the value is max(a, diam - a) = a != b, so the scan stops at #V
    hits = [m for m in range(1, V.m + 1) if gh_simplex_at(V, m, p.a, cap=cap) == p.b]
    return max(hits, default=0)


def chromatic_via_gh(G: SimpleGraph, p: ABParams, cap: int | None = DEFAULT_CAP) -> int:
    return _largest_m_hitting_b(graph_to_chromatic_space(G, p), p, cap) + 1


def clique_cover_via_gh(G: SimpleGraph, p: ABParams, cap: int | None = DEFAULT_CAP) -> int:
    return _largest_m_hitting_b(graph_to_clique_space(G, p), p, cap) + 1


def _colourable(adj: list[set[int]], order: list[int], k: int) -> bool:
    colour = {}

    def rec(idx: int, used: int) -> bool:
        if idx == len(order):
            return True
        v = order[idx]
        banned = {colour[u] for u in adj[v] if u in colour}
        # a fresh colour is interchangeable with any other unused one
        for c in range(min(used + 1, k)):
            if c in banned:
                continue
            colour[v] = c
            if rec(idx + 1, max(used, c + 1)):
                return True
            del colour[v]
        return False

    return rec(0, 0)


def _greedy_clique(adj: list[set[int]]) -> int:
    best = 0
    for start in range(len(adj)):
        clique = [start]
        for v in sorted(adj[start], key=lambda u: -len(adj[u])):
            if all(v in adj[u] for u in clique):
                clique.append(v)
        best = max(best, len(clique))
    return best


def chromatic_direct(G: SimpleGraph, cap: int | None = DEFAULT_COLORING_CAP) -> int:
    """Exact chromatic number by backtracking over ``k = lower bound, lower bound + 1, ...``."""
    if cap is not None and G.n > cap:
        raise CapExceeded(G.n, 0, G.n ** G.n, cap)
    if G.n == 0:
        return 0
    adj = G.neighbours()
    order = sorted(range(G.n), key=lambda v: -len(adj[v]))
    k = max(1, _greedy_clique(adj))
    while not _colourable(adj, order, k):
        k += 1
    return k


def clique_cover_direct(G: SimpleGraph, cap: int | None = DEFAULT_COLORING_CAP) -> int:
    return chromatic_direct(G.complement(), cap)


def read_graph(text: str) -> SimpleGraph:
    """Parse the graph text format: vertex count, then one ``u v`` edge per line."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ParseError("empty graph file")
    try:
        n = int(lines[0])
        edges = [tuple(int(t) for t in ln.split()) for ln in lines[1:]]
    except ValueError as exc:
        raise ParseError(f"bad graph file: {exc}") from exc
    if any(len(e) != 2 for e in edges):
        raise ParseError("each edge line needs exactly two vertex indices")
    try:
        return SimpleGraph.from_edges(n, edges)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def write_graph(G: SimpleGraph) -> str:
    return "\n".join([str(G.n)] + [f"{u} {v}" for u, v in sorted(G.edges)]) + "\n"

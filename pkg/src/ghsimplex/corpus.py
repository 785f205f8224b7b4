"""Built-in test corpus and random space generators."""

from __future__ import annotations

import random
from fractions import Fraction
from pathlib import Path

from .graphs import ABParams, cycle, graph_to_chromatic_space, graph_to_clique_space, write_graph
from .metric import FiniteMetricSpace, from_pairs, make_simplex, triangle_space, validate


def pairs_space() -> FiniteMetricSpace:
    """Two pairs at distance 1, every cross distance 2."""
    return from_pairs("abcd", {
        ("a", "b"): 1, ("c", "d"): 1,
        ("a", "c"): 2, ("a", "d"): 2, ("b", "c"): 2, ("b", "d"): 2,
    })


def triple_plus_one_space() -> FiniteMetricSpace:
    """A 3-cluster at mutual distance 1 and a fourth point at distance 2 from it."""
    return from_pairs("abcd", {
        ("a", "b"): 1, ("a", "c"): 1, ("b", "c"): 1,
        ("a", "d"): 2, ("b", "d"): 2, ("c", "d"): 2,
    })


def line_space(coords, labels=None) -> FiniteMetricSpace:
    coords = [Fraction(c) for c in coords]
    return validate([[abs(a - b) for b in coords] for a in coords], labels)


def l1_plane_space(points, labels=None) -> FiniteMetricSpace:
    mat = [[abs(p[0] - q[0]) + abs(p[1] - q[1]) for q in points] for p in points]
    return validate(mat, labels)


def segment_clusters(count: int, s, gap) -> FiniteMetricSpace:
    """Endpoints of ``count`` collinear segments of length ``s`` separated by ``gap``."""
    coords = []
    x = Fraction(0)
    for _ in range(count):
        coords += [x, x + s]
        x += Fraction(s) + Fraction(gap)
    return line_space(coords)


def random_metric(rng: random.Random, m: int, lo: int = 4, denominators=(1, 2, 3)) -> FiniteMetricSpace:
    """Random rational metric: entries drawn from ``[lo, 2 lo]`` always satisfy the triangle inequality."""
    mat = [[Fraction(0)] * m for _ in range(m)]
    for i in range(m):
        for j in range(i + 1, m):
            q = rng.choice(denominators)
            v = Fraction(rng.randint(lo * q, 2 * lo * q), q)
            mat[i][j] = mat[j][i] = v
    return validate(mat)


def random_ultrametric(rng: random.Random, m: int, levels=(1, 2, 3, 5)) -> FiniteMetricSpace:
    """Ultrametric from random agglomerative merging at increasing heights."""
    clusters = [[i] for i in range(m)]
    mat = [[Fraction(0)] * m for _ in range(m)]
    height = Fraction(0)
    while len(clusters) > 1:
        height += rng.choice(levels)
        a, b = sorted(rng.sample(range(len(clusters)), 2))
        for i in clusters[a]:
            for j in clusters[b]:
                mat[i][j] = mat[j][i] = height
        clusters[a] += clusters.pop(b)
    return validate(mat)


def random_l1_space(rng: random.Random, m: int, size: int = 6) -> FiniteMetricSpace:
    pts: list[tuple[int, int]] = []
    while len(pts) < m:
        p = (rng.randint(0, size), rng.randint(0, size))
        if p not in pts:
            pts.append(p)
    return l1_plane_space(pts)


def random_triangle(rng: random.Random, scale: int = 12):
    """Sorted side lengths ``a <= b <= c`` of a random rational triangle (``c <= a + b``)."""
    while True:
        q = rng.choice((1, 2, 3, 4))
        sides = sorted(Fraction(rng.randint(1, scale * q), q) for _ in range(3))
        if sides[2] <= sides[0] + sides[1]:
            return tuple(sides)


def builtin_corpus() -> dict[str, FiniteMetricSpace]:
    """Named spaces used by the test suite and ``ghs corpus``."""
    ab = ABParams(1, 2)
    c5 = cycle(5)
    rng = random.Random(20240601)
    spaces: dict[str, FiniteMetricSpace] = {}
    for m in range(1, 6):
        spaces[f"delta{m}"] = make_simplex(m, 1)
    spaces["delta3_x2"] = make_simplex(3, 2)
    spaces["tri_1_2_5h"] = triangle_space(1, 2, Fraction(5, 2))
    spaces["tri_1_2_2"] = triangle_space(1, 2, 2)
    spaces["tri_1_1_2"] = triangle_space(1, 1, 2)
    spaces["tri_3_4_5"] = triangle_space(3, 4, 5)
    spaces["tri_2_3_7q"] = triangle_space(2, 3, Fraction(7, 4))
    spaces["pairs_UX"] = pairs_space()
    spaces["triple1_UY"] = triple_plus_one_space()
    # non-isometric, non-ultrametric pairs with identical curves for every n
    spaces["twin_a1"] = validate([[0, 3, 2, 2], [3, 0, 2, 2], [2, 2, 0, 2], [2, 2, 2, 0]])
    spaces["twin_a2"] = validate([[0, 3, 3, 2], [3, 0, 2, 2], [3, 2, 0, 2], [2, 2, 2, 0]])
    spaces["twin_b1"] = validate([[0, 4, 3, 2], [4, 0, 3, 2], [3, 3, 0, 2], [2, 2, 2, 0]])
    spaces["twin_b2"] = validate([[0, 4, 4, 2], [4, 0, 3, 2], [4, 3, 0, 2], [2, 2, 2, 0]])
    spaces["c5_chromatic"] = graph_to_chromatic_space(c5, ab)
    spaces["c5_clique"] = graph_to_clique_space(c5, ab)
    spaces["line_0_1_3_6"] = line_space([0, 1, 3, 6])
    spaces["line_0_1_2_3_4"] = line_space([0, 1, 2, 3, 4])
    spaces["plane_all_plus"] = l1_plane_space([(4, 1), (0, 0), (3, 3), (0, 1)])
    spaces["plane_mixed_horizontal"] = l1_plane_space([(0, 0), (0, 3), (3, 5), (5, 5), (2, 4)])
    spaces["plane_mixed_inclined"] = l1_plane_space([(0, 0), (5, 3), (4, 4), (5, 1), (3, 6)])
    spaces["segments_4x2"] = segment_clusters(4, 1, 2)
    for k in range(3):
        spaces[f"random_m5_{k}"] = random_metric(rng, 5)
    for k in range(2):
        spaces[f"random_m6_{k}"] = random_metric(rng, 6)
    spaces["random_l1_m6"] = random_l1_space(rng, 6)
    spaces["random_l1_m7"] = random_l1_space(rng, 7)
    spaces["ultra_m5"] = random_ultrametric(rng, 5)
    spaces["ultra_m6"] = random_ultrametric(rng, 6)
    spaces["ultra_m7"] = random_ultrametric(rng, 7)
    return spaces


def write_corpus(out_dir) -> list[Path]:
    """Write every corpus space as JSON plus the C5 graph file; returns the written paths."""
    from .io import dump_space_json

    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for name, X in builtin_corpus().items():
        path = out / f"{name}.json"
        path.write_text(dump_space_json(X), encoding="utf-8")
        written.append(path)
    gpath = out / "c5.txt"
    gpath.write_text(write_graph(cycle(5)), encoding="utf-8")
    written.append(gpath)
    return written

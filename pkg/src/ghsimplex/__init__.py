"""Exact Gromov-Hausdorff distances from finite metric spaces to simplexes."""

from .curves import PLCurve, curve_equal, curve_eval
from .distinguish import distinguishability_report, indistinguishable
from .errors import GHSError
from .extremal import extreme_points, m_set, reconstruct_curve
from .metric import FiniteMetricSpace, diameter, is_ultrametric, make_simplex, scale, validate
from .mst import spectrum
from .oracle import brute_gh
from .partitions import ad_set, enumerate_partitions, extremes, stats
from .simplex import gh_simplex_at, gh_simplex_curve, three_point_gh, ultra_curve

__all__ = [
    "FiniteMetricSpace", "GHSError", "PLCurve",
    "ad_set", "brute_gh", "curve_equal", "curve_eval", "diameter",
    "distinguishability_report", "enumerate_partitions", "extreme_points", "extremes",
    "gh_simplex_at", "gh_simplex_curve", "indistinguishable", "is_ultrametric",
    "m_set", "make_simplex", "reconstruct_curve", "scale", "spectrum", "stats",
    "three_point_gh", "ultra_curve", "validate",
]

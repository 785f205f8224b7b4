"""Exception hierarchy.

Every domain error derives from :class:`GHSError`; the CLI maps these to
exit code 2.
"""

from __future__ import annotations


class GHSError(Exception):
    """Base class for all domain errors raised by the package."""


# -- metric validation ------------------------------------------------------

class MetricError(GHSError):
    """A matrix failed to describe a finite metric space."""


class ParseError(MetricError):
    pass


class NotSquare(MetricError):
    pass


class NegativeEntry(MetricError):
    def __init__(self, i: int, j: int, value):
        self.i, self.j, self.value = i, j, value
        super().__init__(f"negative entry {value} at ({i}, {j})")


class NonzeroDiagonal(MetricError):
    def __init__(self, i: int, value):
        self.i, self.value = i, value
        super().__init__(f"nonzero diagonal entry {value} at ({i}, {i})")


class Asymmetric(MetricError):
    def __init__(self, i: int, j: int):
        self.i, self.j = i, j
        super().__init__(f"asymmetric entries at ({i}, {j}) and ({j}, {i})")


class ZeroDistance(MetricError):
    def __init__(self, i: int, j: int):
        self.i, self.j = i, j
        super().__init__(f"distinct points {i} and {j} at distance 0")


class TriangleViolation(MetricError):
    def __init__(self, i: int, j: int, k: int):
        self.i, self.j, self.k = i, j, k
        super().__init__(f"triangle inequality fails: d({i},{k}) > d({i},{j}) + d({j},{k})")


# -- computation guards -----------------------------------------------------

class CapExceeded(GHSError):
    def __init__(self, m: int, n: int, estimated_count: int, cap):
        self.m, self.n, self.estimated_count, self.cap = m, n, estimated_count, cap
        super().__init__(
            f"instance too large for exhaustive search: m={m}, n={n}, "
            f"~{estimated_count} candidates (cap {cap})"
        )


class BlockMismatch(GHSError):
    pass


class DimensionMismatch(GHSError):
    pass


class WrongCardinality(GHSError):
    pass


class NotUltrametric(GHSError):
    pass


class TooSmall(GHSError):
    pass


class LambdaTooSmall(GHSError):
    pass


class LambdaOutOfRange(GHSError):
    pass


class IndexOutOfRange(GHSError):
    pass


class ReconstructionMismatch(GHSError):
    pass


class MalformedMSet(GHSError):
    pass


class BadParams(GHSError):
    pass


class NotTwoDistance(GHSError):
    pass


class InconsistentRoutes(GHSError):
    """Two independent decision routes disagreed; always a bug."""

"""Error types for fanalyze.

Every error carries the process exit code the CLI reports for it:
0 success, 1 invalid fan, 2 parse/IO, 3 unsupported rank, 4 internal limit.
"""

from typing import List, Optional, Sequence


class FanalyzeError(Exception):
    """Base class for all fanalyze errors."""

    exit_code = 4


class ZeroVector(FanalyzeError, ValueError):
    """A vector that must be nonzero was zero."""

    exit_code = 1


class DimensionMismatch(FanalyzeError, ValueError):
    """Vectors or matrices of incompatible lengths were combined."""

    exit_code = 1

    def __init__(self, expected: int, actual: int, what: str = "vector"):
        self.expected = expected
        self.actual = actual
        super().__init__(f"{what} has length {actual}, expected {expected}")


class NotPointed(FanalyzeError, ValueError):
    """The operation needs a strictly convex cone."""

    exit_code = 1


class NotAFace(FanalyzeError, ValueError):
    """The given cone is not a face of the other cone."""

    exit_code = 1


class InvalidFan(FanalyzeError, ValueError):
    """The cones do not form a fan; `diagnostics` lists every violation."""

    exit_code = 1

    def __init__(self, diagnostics: Sequence[str]):
        self.diagnostics: List[str] = list(diagnostics)
        summary = "; ".join(self.diagnostics[:3])
        more = len(self.diagnostics) - 3
        if more > 0:
            summary += f"; ... ({more} more)"
        super().__init__(f"Invalid fan: {summary}")


class RayOutsideSupport(FanalyzeError, ValueError):
    """A subdivision ray lies outside the support of the fan."""

    exit_code = 1


class IncompatibleFans(FanalyzeError, ValueError):
    """Two fans cannot be compared (different ranks or supports)."""

    exit_code = 1


class ComplementNotConnected(FanalyzeError, ValueError):
    """An operation needing a connected complement got n != 1."""

    exit_code = 1

    def __init__(self, components: int):
        self.components = components
        super().__init__(f"Complement has {components} components, expected exactly 1")


class ZeroPolynomial(FanalyzeError, ValueError):
    """Valuations are undefined for the zero Laurent polynomial."""

    exit_code = 1


class RankTooSmall(FanalyzeError, ValueError):
    """The Hartogs analysis needs lattice rank at least 2."""

    exit_code = 3

    def __init__(self, rank: int):
        self.rank = rank
        super().__init__(f"Lattice rank {rank} is not supported (need rank >= 2)")


class ParseError(FanalyzeError, ValueError):
    """Error reading or parsing an input document."""

    exit_code = 2

    def __init__(self, reason: str, path: Optional[str] = None):
        self.reason = reason
        self.path = path
        if path:
            super().__init__(f"{path}: {reason}")
        else:
            super().__init__(reason)


class IterationLimitExceeded(FanalyzeError):
    """An iterative construction hit its configured cap."""

    exit_code = 4

    def __init__(self, limit: int, what: str = "subdivision steps"):
        self.limit = limit
        super().__init__(f"Exceeded the limit of {limit} {what}")


class ConsistencyError(FanalyzeError):
    """Two independent computations of the same quantity disagreed."""

    exit_code = 4

"""
Hartogs verdicts for toric varieties.

The decision rests on the complement components of the fan's support:
    - no component: the variety is compact, nothing to decide
    - some concave component: the Hartogs phenomenon holds
    - exactly one component, not concave: it fails
    - otherwise the answer is not known
"""

import logging
from dataclasses import dataclass
from enum import Enum
from itertools import product
from typing import List, Optional, Tuple

from fanalyze.errors import ComplementNotConnected, RankTooSmall
from fanalyze.geometry.complement import ComplementAnalysis, complement_components
from fanalyze.geometry.cone import contains
from fanalyze.geometry.fan import Fan
from fanalyze.lattice import LatticeVector, is_zero

logger = logging.getLogger(__name__)


class Verdict(Enum):
    HOLDS = "Holds"
    FAILS = "Fails"
    UNKNOWN = "Unknown"
    NOT_APPLICABLE_COMPACT = "NotApplicableCompact"


@dataclass(frozen=True)
class HartogsVerdict:
    verdict: Verdict
    n: int
    witness_component: Optional[int] = None
    h1c_trivial: Optional[bool] = None
    basis: str = ""

    def __post_init__(self):
        if (self.verdict is Verdict.HOLDS) != (self.witness_component is not None):
            raise ValueError("a witness component is recorded exactly for Holds")
        if (self.n == 1) != (self.h1c_trivial is not None):
            raise ValueError("h1c_trivial is recorded exactly when n = 1")


@dataclass(frozen=True)
class ObstructionSet:
    bound: int
    exponents: Tuple[LatticeVector, ...]

    @property
    def is_empty(self) -> bool:
        return not self.exponents


def _analysis(fan: Fan, analysis: Optional[ComplementAnalysis]) -> ComplementAnalysis:
    if fan.rank < 2:
        raise RankTooSmall(fan.rank)
    if analysis is None:
        return complement_components(fan)
    return analysis


def h1c_trivial(fan: Fan, analysis: Optional[ComplementAnalysis] = None) -> bool:
    """Compactly supported H^1 of the structure sheaf vanishes.

    For a connected complement this is the concavity of its unique component.

    Raises:
        ComplementNotConnected: the complement does not have exactly one component
    """
    analysis = _analysis(fan, analysis)
    if analysis.n != 1:
        raise ComplementNotConnected(analysis.n)
    return analysis.components[0].concave


def hartogs_verdict(fan: Fan, analysis: Optional[ComplementAnalysis] = None) -> HartogsVerdict:
    """Decide the Hartogs phenomenon for the toric variety of the fan."""
    analysis = _analysis(fan, analysis)
    n = analysis.n
    trivial = analysis.components[0].concave if n == 1 else None
    if n == 0:
        result = HartogsVerdict(
            Verdict.NOT_APPLICABLE_COMPACT, n=0, basis="compact: the fan is complete"
        )
    else:
        concave = [c.id for c in analysis.components if c.concave]
        if concave:
            result = HartogsVerdict(
                Verdict.HOLDS,
                n=n,
                witness_component=min(concave),
                h1c_trivial=trivial,
                basis="a complement component is concave",
            )
        elif n == 1:
            result = HartogsVerdict(
                Verdict.FAILS,
                n=1,
                h1c_trivial=False,
                basis="connected complement whose convex hull is a proper cone",
            )
        else:
            result = HartogsVerdict(
                Verdict.UNKNOWN,
                n=n,
                basis="several components and none concave: no criterion applies",
            )
    logger.debug("Hartogs verdict %s (n=%d)", result.verdict.value, n)
    return result


def obstruction_exponents(
    fan: Fan, bound: int, analysis: Optional[ComplementAnalysis] = None
) -> ObstructionSet:
    """Nonzero lattice points I of the closure dual with max |I_i| <= bound.

    These are the exponents of the Laurent monomials that survive in
    compactly supported H^1 when the complement is connected.

    Raises:
        ComplementNotConnected: the complement does not have exactly one component
    """
    if bound < 1:
        raise ValueError(f"bound must be at least 1, got {bound}")
    analysis = _analysis(fan, analysis)
    if analysis.n != 1:
        raise ComplementNotConnected(analysis.n)
    cone = analysis.components[0].closure_dual
    exponents: List[LatticeVector] = []
    if not cone.is_zero:
        box = range(-bound, bound + 1)
        for point in product(box, repeat=fan.rank):
            if not is_zero(point) and contains(cone, point).inside:
                exponents.append(point)
    return ObstructionSet(bound=bound, exponents=tuple(sorted(exponents)))

"""
Connected components of the complement of a fan's support.

The fan's hyperplanes cut R^p into regions. The relative interior of every
face of that arrangement lies either inside or outside each cone of the fan,
so the complement of the support is exactly the union of the open regions
outside the support glued along the faces they share outside the support.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import List, Optional, Sequence, Tuple

from fanalyze.errors import ComplementNotConnected, RankTooSmall
from fanalyze.geometry.arrangement import hyperplanes_of, split_space
from fanalyze.geometry.cone import Cone, dual, faces, intersect, relint_point
from fanalyze.geometry.fan import Fan, support_contains
from fanalyze.lattice import LatticeVector, rank
from fanalyze.utils import DisjointSet

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ArrangementFan:
    hyperplanes: Tuple[LatticeVector, ...]
    regions: Tuple[Cone, ...]
    inside_flags: Tuple[bool, ...]
    signs: Tuple[Tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return self.regions[0].rank

    def outside_ids(self) -> List[int]:
        return [i for i, inside in enumerate(self.inside_flags) if not inside]


@dataclass(frozen=True)
class ComplementComponent:
    id: int
    region_ids: Tuple[int, ...]
    closure_dual: Cone
    concave: bool


@dataclass(frozen=True)
class ComplementAnalysis:
    fan: Fan
    arrangement: ArrangementFan
    components: Tuple[ComplementComponent, ...]

    @property
    def n(self) -> int:
        return len(self.components)


def arrangement(fan: Fan) -> ArrangementFan:
    """Regions of the fan's hyperplane arrangement, flagged inside/outside the support."""
    if fan.rank < 2:
        raise RankTooSmall(fan.rank)
    hyperplanes = hyperplanes_of(fan.max_cones)
    regions = split_space(fan.rank, hyperplanes)
    inside = tuple(support_contains(fan, relint_point(region)) for region, _ in regions)
    return ArrangementFan(
        hyperplanes=tuple(hyperplanes),
        regions=tuple(region for region, _ in regions),
        inside_flags=inside,
        signs=tuple(signs for _, signs in regions),
    )


def _glued(fan: Fan, arr: ArrangementFan, i: int, j: int) -> bool:
    """Regions i and j share a face of positive dimension outside the support."""
    disagree = [h for h, a, b in zip(arr.hyperplanes, arr.signs[i], arr.signs[j]) if a != b]
    if rank(disagree, arr.rank) > arr.rank - 1:
        return False
    common = intersect(arr.regions[i], arr.regions[j])
    if common.dim < 1:
        return False
    return not support_contains(fan, relint_point(common))


def closure_dual(arr: ArrangementFan, region_ids: Sequence[int]) -> Cone:
    """Dual of the closure of a union of regions: the intersection of their duals."""
    return reduce(intersect, (dual(arr.regions[i]) for i in region_ids))


def is_concave(component: ComplementComponent) -> bool:
    """The convex hull of the component's closure is all of R^p."""
    return component.closure_dual.is_zero


def _first_point(arr: ArrangementFan, region_ids: Sequence[int]) -> Tuple[Fraction, ...]:
    return min(relint_point(arr.regions[i]) for i in region_ids)


def complement_components(fan: Fan) -> ComplementAnalysis:
    """Split the complement of |fan| into connected components.

    Components are numbered in the order of their lexicographically smallest
    region interior point.
    """
    arr = arrangement(fan)
    outside = arr.outside_ids()
    groups = DisjointSet(outside)
    for a, i in enumerate(outside):
        for j in outside[a + 1 :]:
            if groups.find(i) != groups.find(j) and _glued(fan, arr, i, j):
                groups.union(i, j)
    region_groups = sorted(
        (sorted(group) for group in groups.groups()), key=lambda g: _first_point(arr, g)
    )
    components = []
    for cid, region_ids in enumerate(region_groups):
        cd = closure_dual(arr, region_ids)
        components.append(
            ComplementComponent(
                id=cid, region_ids=tuple(region_ids), closure_dual=cd, concave=cd.is_zero
            )
        )
    logger.debug(
        "%d regions, %d outside, %d complement components",
        len(arr.regions),
        len(outside),
        len(components),
    )
    return ComplementAnalysis(fan=fan, arrangement=arr, components=tuple(components))


def _outside_faces(fan: Fan, arr: ArrangementFan, i: int) -> List[Cone]:
    return [
        face
        for face in faces(arr.regions[i])
        if not face.is_zero and not support_contains(fan, relint_point(face))
    ]


def boundary_cones(fan: Fan, analysis: Optional[ComplementAnalysis] = None) -> List[Cone]:
    """Arrangement cones whose relative interior misses the support of the fan."""
    arr = analysis.arrangement if analysis is not None else arrangement(fan)
    found = set()
    for i in arr.outside_ids():
        found.update(_outside_faces(fan, arr, i))
    return sorted(found, key=Cone.sort_key)


def boundary_is_connected(fan: Fan, analysis: Optional[ComplementAnalysis] = None) -> bool:
    """For a connected complement, check that the outside cones form one family
    under the face relation.

    Raises:
        ComplementNotConnected: the complement does not have exactly one component
    """
    if analysis is None:
        analysis = complement_components(fan)
    if analysis.n != 1:
        raise ComplementNotConnected(analysis.n)
    arr = analysis.arrangement
    families = DisjointSet()
    for i in arr.outside_ids():
        families.add(("region", i))
        for face in _outside_faces(fan, arr, i):
            families.add(face)
            families.union(("region", i), face)
    return len(families.groups()) == 1

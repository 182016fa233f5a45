"""
Fans: finite face-closed collections of strictly convex cones meeting in
common faces.

A Fan is built only through fan_from_max_cones (or the internal
fan_from_cones), which always revalidates the intersection condition and
recomputes the face closure.
"""

import logging
from dataclasses import dataclass, field
from functools import cmp_to_key
from typing import Dict, List, Optional, Sequence, Tuple

from fanalyze.config import get_max_subdivisions
from fanalyze.errors import (
    DimensionMismatch,
    IncompatibleFans,
    InvalidFan,
    IterationLimitExceeded,
    RayOutsideSupport,
    ZeroVector,
)
from fanalyze.geometry.arrangement import arrangement_faces, hyperplanes_of, split_space
from fanalyze.geometry.cone import (
    Cone,
    cone_contains_cone,
    cone_from_rays,
    contains,
    faces,
    intersect,
    is_face_of,
    is_simplicial,
    is_smooth,
    relint_point,
)
from fanalyze.lattice import (
    IntMatrix,
    LatticeVector,
    is_zero,
    matvec,
    parallelepiped_points,
    primitivize,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Fan:
    """A rational polyhedral fan in R^rank.

    max_cones and all_cones are sorted by (dimension, rays); ray_generators
    are the primitive generators of the one-dimensional cones, sorted.
    """

    rank: int
    max_cones: Tuple[Cone, ...]
    all_cones: Tuple[Cone, ...]
    ray_generators: Tuple[LatticeVector, ...]

    def cone_index(self, cone: Cone) -> int:
        """Stable id of a cone: its position in all_cones."""
        return self.all_cones.index(cone)

    def max_cone_indices(self) -> List[List[int]]:
        """Max cones as lists of indices into ray_generators."""
        position = {r: i for i, r in enumerate(self.ray_generators)}
        return [sorted(position[r] for r in cone.rays) for cone in self.max_cones]


@dataclass(frozen=True)
class FanMorphism:
    """A lattice map N' -> N given by an integer matrix (rows = target coordinates)."""

    matrix: Tuple[Tuple[int, ...], ...]
    source: Fan
    target: Fan

    def __post_init__(self):
        if len(self.matrix) != self.target.rank:
            raise DimensionMismatch(self.target.rank, len(self.matrix), "matrix rows")
        for row in self.matrix:
            if len(row) != self.source.rank:
                raise DimensionMismatch(self.source.rank, len(row), "matrix row")

    def apply(self, v: Sequence[int]) -> LatticeVector:
        return matvec(self.matrix, v)


@dataclass(frozen=True)
class SmoothnessCheck:
    smooth: bool
    cone_flags: Tuple[bool, ...] = field(default_factory=tuple)


@dataclass(frozen=True)
class Completion:
    fan: Fan
    subdivided: bool


# =============================================================================
# Construction
# =============================================================================


def fan_from_cones(rank: int, cones: Sequence[Cone]) -> Fan:
    """Validate cones as a fan and compute the face closure.

    Diagnostics number cones by their position in the input; a repeated cone
    keeps the position of its first occurrence.
    """
    diagnostics: List[str] = []
    distinct: List[Cone] = []
    positions: List[int] = []
    for position, cone in enumerate(cones):
        if cone.rank != rank:
            raise DimensionMismatch(rank, cone.rank, "cone")
        if cone not in distinct:
            distinct.append(cone)
            positions.append(position)

    for i, cone in zip(positions, distinct):
        if not cone.is_pointed:
            diagnostics.append(f"cone {i} {cone} is not strictly convex")

    for a_index in range(len(distinct)):
        for b_index in range(a_index + 1, len(distinct)):
            a, b = distinct[a_index], distinct[b_index]
            common = intersect(a, b)
            if not (is_face_of(common, a) and is_face_of(common, b)):
                diagnostics.append(
                    f"cones {positions[a_index]} and {positions[b_index]} meet in {common}, "
                    "which is not a common face"
                )
    if diagnostics:
        raise InvalidFan(diagnostics)

    closure = {cone_from_rays(rank, [])}
    for cone in distinct:
        closure.update(faces(cone))
    all_cones = sorted(closure, key=Cone.sort_key)

    maximal = [
        cone
        for cone in distinct
        if not any(other != cone and cone_contains_cone(other, cone) for other in distinct)
    ]
    if not maximal:
        maximal = [all_cones[0]]
    max_cones = sorted(set(maximal), key=Cone.sort_key)
    rays = sorted(c.rays[0] for c in all_cones if c.dim == 1)
    logger.debug(
        "Fan of rank %d: %d max cones, %d cones, %d rays",
        rank,
        len(max_cones),
        len(all_cones),
        len(rays),
    )
    return Fan(
        rank=rank,
        max_cones=tuple(max_cones),
        all_cones=tuple(all_cones),
        ray_generators=tuple(rays),
    )


def fan_from_max_cones(
    rank: int, rays: Sequence[Sequence[int]], cones: Sequence[Sequence[int]]
) -> Fan:
    """Build a fan from ray vectors and cones given as lists of ray indices.

    Raises:
        DimensionMismatch: a ray has the wrong length
        InvalidFan: zero ray, bad index, non-pointed cone, or two cones not
            meeting in a common face (all violations are listed)

    Example:
        >>> fan = fan_from_max_cones(2, [(1, 0), (0, 1)], [[0, 1]])
        >>> len(fan.all_cones)
        4
    """
    diagnostics: List[str] = []
    for i, r in enumerate(rays):
        if len(r) != rank:
            raise DimensionMismatch(rank, len(r), f"ray {i}")
        if is_zero(r):
            diagnostics.append(f"ray {i} is the zero vector")
    for j, indices in enumerate(cones):
        for idx in indices:
            if not 0 <= idx < len(rays):
                diagnostics.append(f"cone {j} refers to missing ray {idx}")
    if diagnostics:
        raise InvalidFan(diagnostics)
    built = [cone_from_rays(rank, [rays[i] for i in indices]) for indices in cones]
    return fan_from_cones(rank, built)


# =============================================================================
# Queries
# =============================================================================


def support_contains(fan: Fan, x: Sequence) -> bool:
    if len(x) != fan.rank:
        raise DimensionMismatch(fan.rank, len(x))
    return any(contains(cone, x).inside for cone in fan.max_cones)


def fan_regions(fan: Fan):
    """Regions of the arrangement cut out by the max cones of the fan."""
    return split_space(fan.rank, hyperplanes_of(fan.max_cones))


def is_complete(fan: Fan) -> bool:
    """Support is all of R^rank: every arrangement region lies in the support."""
    return all(support_contains(fan, relint_point(region)) for region, _ in fan_regions(fan))


def is_smooth_fan(fan: Fan) -> SmoothnessCheck:
    flags = tuple(is_smooth(cone) for cone in fan.max_cones)
    return SmoothnessCheck(smooth=all(flags), cone_flags=flags)


def support_subset(inner: Fan, outer: Fan) -> bool:
    """Decide |inner| ⊆ |outer| on the common refinement of both arrangements.

    Both supports are unions of closed faces of that arrangement, so it is
    enough to test one relative interior point per face.
    """
    if inner.rank != outer.rank:
        raise IncompatibleFans(f"ranks differ: {inner.rank} and {outer.rank}")
    hyperplanes = hyperplanes_of(list(inner.max_cones) + list(outer.max_cones))
    for face in arrangement_faces(split_space(inner.rank, hyperplanes)):
        point = relint_point(face)
        if support_contains(inner, point) and not support_contains(outer, point):
            return False
    return True


def is_subdivision(finer: Fan, coarser: Fan) -> bool:
    """Every cone of finer lies in a cone of coarser and the supports agree."""
    if finer.rank != coarser.rank:
        raise IncompatibleFans(f"ranks differ: {finer.rank} and {coarser.rank}")
    for cone in finer.max_cones:
        if not any(cone_contains_cone(big, cone) for big in coarser.max_cones):
            return False
    return support_subset(coarser, finer)


def is_fan_morphism(phi: FanMorphism) -> Tuple[bool, Dict[int, int]]:
    """Check that every source cone maps into some target cone.

    The witness maps each source max cone index to the index (in
    target.all_cones) of the smallest target cone containing its image.
    """
    witness: Dict[int, int] = {}
    target = phi.target
    for i, cone in enumerate(phi.source.max_cones):
        image = [phi.apply(g) for g in cone.generators()]
        found = None
        for j, candidate in enumerate(target.all_cones):
            if all(contains(candidate, x).inside for x in image):
                found = j
                break
        if found is None:
            logger.debug("Source cone %s has no target cone containing its image", cone)
            return False, witness
        witness[i] = found
    return True, witness


# =============================================================================
# Subdivision and resolution
# =============================================================================


def stellar_subdivide(fan: Fan, ray: Sequence[int]) -> Fan:
    """Star subdivision of the fan at a ray in its support.

    Every cone containing the ray is replaced by the joins of the ray with its
    faces not containing the ray. Subdividing at an existing ray is a no-op.
    """
    if len(ray) != fan.rank:
        raise DimensionMismatch(fan.rank, len(ray))
    if is_zero(ray):
        raise ZeroVector("cannot subdivide at the zero vector")
    r, _ = primitivize(ray)
    if not support_contains(fan, r):
        raise RayOutsideSupport(f"{r} is not in the support of the fan")
    if r in fan.ray_generators:
        return fan

    new_cones: List[Cone] = []
    for cone in fan.max_cones:
        if not contains(cone, r).inside:
            new_cones.append(cone)
            continue
        for face in faces(cone):
            if face.dim == cone.dim - 1 and not contains(face, r).inside:
                new_cones.append(cone_from_rays(fan.rank, list(face.rays) + [r]))
    logger.debug("Stellar subdivision at %s", r)
    return fan_from_cones(fan.rank, new_cones)


def _resolution_ray(cone: Cone) -> LatticeVector:
    """Subdivision ray for a non-smooth cone.

    Non-simplicial cones use the primitive sum of their rays. Simplicial
    cones use the nonzero parallelepiped point with the least coefficient
    sum, lexicographically first among ties.
    """
    if not is_simplicial(cone):
        total = [sum(r[i] for r in cone.rays) for i in range(cone.rank)]
        return primitivize(total)[0]
    candidates = [
        (sum(coeffs), point)
        for point, coeffs in parallelepiped_points(cone.rays, cone.rank)
        if not is_zero(point)
    ]
    _, point = min(candidates)
    return primitivize(point)[0]


def resolve(fan: Fan, max_steps: Optional[int] = None) -> Fan:
    """Smooth refinement by repeated stellar subdivision.

    The lexicographically first non-smooth max cone is subdivided at each
    step until the fan is smooth.

    Raises:
        IterationLimitExceeded: more than max_steps subdivisions were needed
    """
    limit = get_max_subdivisions(max_steps)
    current = fan
    for step in range(limit + 1):
        singular = [cone for cone in current.max_cones if not is_smooth(cone)]
        if not singular:
            logger.debug("Resolution finished after %d subdivisions", step)
            return current
        if step == limit:
            break
        cone = min(singular, key=lambda c: c.rays)
        current = stellar_subdivide(current, _resolution_ray(cone))
    raise IterationLimitExceeded(limit)


# =============================================================================
# Completion
# =============================================================================


def _angle_half(v: Sequence[int]) -> int:
    return 0 if v[1] > 0 or (v[1] == 0 and v[0] > 0) else 1


def _angle_compare(a: Sequence[int], b: Sequence[int]) -> int:
    ha, hb = _angle_half(a), _angle_half(b)
    if ha != hb:
        return ha - hb
    cross = a[0] * b[1] - a[1] * b[0]
    return -1 if cross > 0 else (1 if cross < 0 else 0)


def _rotate(v: Sequence[int]) -> LatticeVector:
    return (-v[1], v[0])


def _fill_gap(start: LatticeVector, end: Optional[LatticeVector]) -> List[List[LatticeVector]]:
    """Cones covering the counterclockwise gap from start to end.

    end is None when start is the only ray and the gap is a full turn.
    """
    cones = []
    current = start
    while True:
        if end is not None and current != end:
            cross = current[0] * end[1] - current[1] * end[0]
            if cross > 0:
                cones.append([current, end])
                return cones
        step = _rotate(current)
        cones.append([current, step])
        current = step
        if end is None:
            end = start


def _complete_rank2(fan: Fan) -> Fan:
    rays = sorted(fan.ray_generators, key=cmp_to_key(_angle_compare))
    two_cones = {c.rays for c in fan.max_cones if c.dim == 2}
    if not rays:
        new = _fill_gap((1, 0), None)
    elif len(rays) == 1:
        new = _fill_gap(rays[0], None)
    else:
        new = []
        for i, start in enumerate(rays):
            end = rays[(i + 1) % len(rays)]
            cross = start[0] * end[1] - start[1] * end[0]
            if cross > 0 and tuple(sorted([start, end])) in two_cones:
                continue
            new.extend(_fill_gap(start, end))
    cones = list(fan.max_cones) + [cone_from_rays(2, pair) for pair in new]
    logger.debug("Rank-2 completion added %d cones", len(new))
    return fan_from_cones(2, cones)


def complete_fan(fan: Fan) -> Completion:
    """A complete fan containing the cones of the fan (or of a subdivision).

    Rank 1 and 2 fill the gaps without touching existing cones. In higher
    rank the arrangement fan is returned, which refines a completion, and
    subdivided is True.
    """
    if is_complete(fan):
        return Completion(fan=fan, subdivided=False)
    if fan.rank == 1:
        return Completion(
            fan=fan_from_max_cones(1, [(1,), (-1,)], [[0], [1]]), subdivided=False
        )
    if fan.rank == 2:
        return Completion(fan=_complete_rank2(fan), subdivided=False)
    regions = [region for region, _ in fan_regions(fan)]
    return Completion(fan=fan_from_cones(fan.rank, regions), subdivided=True)


def transform_fan(fan: Fan, matrix: IntMatrix) -> Fan:
    """Image of the fan under a unimodular matrix acting on column vectors."""
    cones = [cone_from_rays(fan.rank, [matvec(matrix, r) for r in c.rays]) for c in fan.max_cones]
    return fan_from_cones(fan.rank, cones)

"""Central hyperplane arrangements cut out by the cones of a fan."""

import logging
from typing import Iterable, List, Sequence, Tuple

from fanalyze.geometry.cone import Cone, faces, halfspace, intersect, whole_space
from fanalyze.lattice import LatticeVector, dot, neg, primitivize

logger = logging.getLogger(__name__)

Region = Tuple[Cone, Tuple[int, ...]]


def normalize_hyperplane(h: Sequence[int]) -> LatticeVector:
    """Primitive normal with a positive first nonzero coordinate."""
    v, _ = primitivize(h)
    first = next(x for x in v if x != 0)
    return v if first > 0 else neg(v)


def hyperplanes_of(cones: Iterable[Cone]) -> List[LatticeVector]:
    """Facet normals and span equations of the cones, as sorted distinct hyperplanes."""
    found = set()
    for cone in cones:
        for h in list(cone.facet_normals) + list(cone.span_equations):
            found.add(normalize_hyperplane(h))
    return sorted(found)


def _side(region: Cone, h: Sequence[int]) -> int:
    """+1 / -1 if the region lies on one closed side of h, 0 if h cuts it."""
    if any(dot(h, v) != 0 for v in region.lineality_basis):
        return 0
    values = [dot(h, r) for r in region.rays]
    if all(v >= 0 for v in values):
        return 1
    if all(v <= 0 for v in values):
        return -1
    return 0


def split_space(rank: int, hyperplanes: Sequence[Sequence[int]]) -> List[Region]:
    """Full-dimensional regions of the arrangement with their sign vectors.

    Regions are produced by cutting R^rank by each hyperplane in turn; a
    region that lies on one side of a hyperplane is carried over unsplit.
    The result is sorted by region rays.
    """
    regions: List[Tuple[Cone, List[int]]] = [(whole_space(rank), [])]
    for h in hyperplanes:
        upper, lower = halfspace(h), halfspace(neg(h))
        next_regions = []
        for region, signs in regions:
            side = _side(region, h)
            if side:
                next_regions.append((region, signs + [side]))
                continue
            for half, sign in ((upper, 1), (lower, -1)):
                piece = intersect(region, half)
                if piece.dim == rank:
                    next_regions.append((piece, signs + [sign]))
        regions = next_regions
    logger.debug("Arrangement of %d hyperplanes has %d regions", len(hyperplanes), len(regions))
    result = [(region, tuple(signs)) for region, signs in regions]
    return sorted(result, key=lambda item: item[0].sort_key())


def arrangement_faces(regions: Sequence[Region]) -> List[Cone]:
    """Every face of every region, without repeats, ordered by (dimension, rays)."""
    seen = set()
    for region, _ in regions:
        if region.is_pointed:
            seen.update(faces(region))
        else:
            seen.add(region)
    return sorted(seen, key=Cone.sort_key)

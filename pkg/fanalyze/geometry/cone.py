"""
Rational polyhedral cones in both representations.

A Cone always carries its V-representation (extreme rays plus a lineality
basis) and its H-representation (facet normals plus span equations), both in
canonical form, so two cones are equal exactly when their fields are equal.

All conversions go through one double description routine,
`_double_description`, which turns a system {x : A x >= 0, E x = 0} into
generators. The dual conversion is the same routine applied to the
generators read as inequalities.

Canonical form:
    lineality_basis, span_equations: HNF basis of the saturated lattice
    rays: primitive, orthogonal to the lineality space, sorted lexicographically
    facet_normals: primitive, inside the linear span of the cone, sorted
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import FrozenSet, Iterable, List, Sequence, Tuple

from fanalyze.errors import DimensionMismatch, NotPointed
from fanalyze.lattice import (
    LatticeVector,
    RationalVector,
    combine,
    dot,
    integerize,
    invariant_factors,
    is_zero,
    neg,
    primitivize,
    project_to_complement,
    saturated_basis,
    unit_vector,
)


class Position(Enum):
    INTERIOR = "interior"
    BOUNDARY = "boundary"
    OUTSIDE = "outside"


@dataclass(frozen=True)
class Containment:
    """Result of a membership test. INTERIOR means the relative interior."""

    inside: bool
    position: Position

    def __bool__(self) -> bool:
        return self.inside


@dataclass(frozen=True)
class Cone:
    """A rational polyhedral cone in R^rank.

    Build cones with cone_from_rays / cone_from_inequalities; the constructor
    does not canonicalize.
    """

    rank: int
    rays: Tuple[LatticeVector, ...]
    lineality_basis: Tuple[LatticeVector, ...]
    facet_normals: Tuple[LatticeVector, ...]
    span_equations: Tuple[LatticeVector, ...]

    @property
    def dim(self) -> int:
        return self.rank - len(self.span_equations)

    @property
    def is_pointed(self) -> bool:
        return not self.lineality_basis

    @property
    def is_zero(self) -> bool:
        return not self.rays and not self.lineality_basis

    def sort_key(self) -> tuple:
        return (self.dim, self.rays, self.lineality_basis)

    def generators(self) -> List[LatticeVector]:
        """Rays plus both orientations of the lineality basis."""
        return list(self.rays) + list(self.lineality_basis) + [neg(v) for v in self.lineality_basis]

    def __str__(self) -> str:
        text = "Cone(" + ", ".join(str(r) for r in self.rays) + ")"
        if self.lineality_basis:
            text += " + span(" + ", ".join(str(v) for v in self.lineality_basis) + ")"
        return text


# =============================================================================
# Double description
# =============================================================================


def _prim(v: Sequence[int]) -> LatticeVector:
    return primitivize(v)[0]


def _double_description(
    rank: int,
    inequalities: Sequence[Sequence[int]],
    equations: Sequence[Sequence[int]] = (),
) -> Tuple[List[LatticeVector], List[LatticeVector]]:
    """Generators (lineality vectors, rays) of {x : a.x >= 0 for a in inequalities,
    e.x = 0 for e in equations}.

    Starts from the whole space and cuts by one halfspace at a time. Equations
    enter as pairs of opposite inequalities. Adjacency of rays is decided from
    their sets of tight constraints.
    """
    constraints: List[LatticeVector] = []
    for e in equations:
        constraints.append(tuple(e))
        constraints.append(neg(e))
    constraints.extend(tuple(a) for a in inequalities)

    lineality: List[LatticeVector] = [unit_vector(rank, i) for i in range(rank)]
    rays: List[LatticeVector] = []
    tight: List[FrozenSet[int]] = []

    for k, a in enumerate(constraints):
        if len(a) != rank:
            raise DimensionMismatch(rank, len(a), "constraint")
        if is_zero(a):
            continue
        values = [dot(a, v) for v in lineality]
        idx = next((i for i, v in enumerate(values) if v != 0), None)
        if idx is not None:
            l0, v0 = lineality[idx], values[idx]
            if v0 < 0:
                l0, v0 = neg(l0), -v0
            lineality = [
                _prim(combine(v0, v, -value, l0)) if value else v
                for i, (v, value) in enumerate(zip(lineality, values))
                if i != idx
            ]
            rays = [
                _prim(combine(v0, r, -dot(a, r), l0)) if dot(a, r) else r for r in rays
            ]
            tight = [t | {k} for t in tight]
            rays.append(l0)
            tight.append(frozenset(range(k)))
            continue

        values = [dot(a, r) for r in rays]
        positive = [i for i, v in enumerate(values) if v > 0]
        negative = [i for i, v in enumerate(values) if v < 0]
        if not negative:
            tight = [t | {k} if v == 0 else t for t, v in zip(tight, values)]
            continue

        new_rays: List[LatticeVector] = []
        new_tight: List[FrozenSet[int]] = []
        for i, v in enumerate(values):
            if v >= 0:
                new_rays.append(rays[i])
                new_tight.append(tight[i] | {k} if v == 0 else tight[i])
        for p in positive:
            for n in negative:
                common = tight[p] & tight[n]
                if any(
                    common <= tight[r] for r in range(len(rays)) if r != p and r != n
                ):
                    continue
                new_rays.append(_prim(combine(values[p], rays[n], -values[n], rays[p])))
                new_tight.append(common | {k})
        rays, tight = new_rays, new_tight

    return lineality, rays


def _canonical_rays(
    rays: Iterable[Sequence[int]], modulo: Sequence[LatticeVector]
) -> Tuple[LatticeVector, ...]:
    """Project onto the complement of span(modulo), make primitive, dedupe and sort."""
    result = set()
    for r in rays:
        v = integerize(project_to_complement(r, modulo))
        if not is_zero(v):
            result.add(v)
    return tuple(sorted(result))


def _check_rank(rank: int, vectors: Iterable[Sequence]) -> None:
    if rank < 0:
        raise ValueError(f"rank must be nonnegative, got {rank}")
    for v in vectors:
        if len(v) != rank:
            raise DimensionMismatch(rank, len(v))


@lru_cache(maxsize=65536)
def _from_rays(rank: int, generators: Tuple[LatticeVector, ...]) -> Cone:
    dual_lineality, dual_rays = _double_description(rank, generators)
    span_equations = tuple(saturated_basis(dual_lineality, rank))
    facet_normals = _canonical_rays(dual_rays, span_equations)
    lineality, rays = _double_description(rank, facet_normals, span_equations)
    lineality_basis = tuple(saturated_basis(lineality, rank))
    return Cone(
        rank=rank,
        rays=_canonical_rays(rays, lineality_basis),
        lineality_basis=lineality_basis,
        facet_normals=facet_normals,
        span_equations=span_equations,
    )


@lru_cache(maxsize=65536)
def _from_inequalities(
    rank: int,
    inequalities: Tuple[LatticeVector, ...],
    equations: Tuple[LatticeVector, ...],
) -> Cone:
    lineality, rays = _double_description(rank, inequalities, equations)
    lineality_basis = tuple(saturated_basis(lineality, rank))
    canonical_rays = _canonical_rays(rays, lineality_basis)
    generators = list(canonical_rays) + list(lineality_basis) + [neg(v) for v in lineality_basis]
    dual_lineality, dual_rays = _double_description(rank, generators)
    span_equations = tuple(saturated_basis(dual_lineality, rank))
    return Cone(
        rank=rank,
        rays=canonical_rays,
        lineality_basis=lineality_basis,
        facet_normals=_canonical_rays(dual_rays, span_equations),
        span_equations=span_equations,
    )


# =============================================================================
# Construction
# =============================================================================


def cone_from_rays(rank: int, generators: Iterable[Sequence[int]]) -> Cone:
    """Cone generated by integer vectors; zero generators are ignored.

    Example:
        >>> cone_from_rays(2, [(2, 0), (0, 3), (1, 1)]).rays
        ((0, 1), (1, 0))
    """
    gens = [tuple(int(x) for x in g) for g in generators]
    _check_rank(rank, gens)
    gens = sorted({_prim(g) for g in gens if not is_zero(g)})
    return _from_rays(rank, tuple(gens))


def cone_from_inequalities(
    rank: int,
    inequalities: Iterable[Sequence[int]],
    equations: Iterable[Sequence[int]] = (),
) -> Cone:
    """Cone {x : a.x >= 0 for each inequality, e.x = 0 for each equation}."""
    ineqs = [tuple(int(x) for x in a) for a in inequalities]
    eqs = [tuple(int(x) for x in e) for e in equations]
    _check_rank(rank, ineqs + eqs)
    ineqs = sorted({_prim(a) for a in ineqs if not is_zero(a)})
    eqs = sorted({_prim(e) for e in eqs if not is_zero(e)})
    return _from_inequalities(rank, tuple(ineqs), tuple(eqs))


def zero_cone(rank: int) -> Cone:
    return cone_from_rays(rank, [])


def whole_space(rank: int) -> Cone:
    return cone_from_inequalities(rank, [])


def halfspace(normal: Sequence[int]) -> Cone:
    """Closed halfspace {x : normal.x >= 0}."""
    return cone_from_inequalities(len(normal), [normal])


# =============================================================================
# Operations
# =============================================================================


def dual(cone: Cone) -> Cone:
    """The dual cone {m : m.x >= 0 for all x in the cone}."""
    return cone_from_rays(
        cone.rank,
        list(cone.facet_normals) + list(cone.span_equations) + [neg(e) for e in cone.span_equations],
    )


def dim(cone: Cone) -> int:
    return cone.dim


def is_strictly_convex(cone: Cone) -> bool:
    return cone.is_pointed


def contains(cone: Cone, x: Sequence) -> Containment:
    """Decide x in cone, and whether x lies in the relative interior."""
    if len(x) != cone.rank:
        raise DimensionMismatch(cone.rank, len(x))
    if any(dot(e, x) != 0 for e in cone.span_equations):
        return Containment(False, Position.OUTSIDE)
    values = [dot(n, x) for n in cone.facet_normals]
    if any(v < 0 for v in values):
        return Containment(False, Position.OUTSIDE)
    if all(v > 0 for v in values):
        return Containment(True, Position.INTERIOR)
    return Containment(True, Position.BOUNDARY)


def cone_contains_cone(outer: Cone, inner: Cone) -> bool:
    """True when inner is a subset of outer."""
    if outer.rank != inner.rank:
        raise DimensionMismatch(outer.rank, inner.rank, "cone")
    return all(contains(outer, g).inside for g in inner.generators())


def intersect(a: Cone, b: Cone) -> Cone:
    if a.rank != b.rank:
        raise DimensionMismatch(a.rank, b.rank, "cone")
    return cone_from_inequalities(
        a.rank,
        list(a.facet_normals) + list(b.facet_normals),
        list(a.span_equations) + list(b.span_equations),
    )


def relint_point(cone: Cone) -> RationalVector:
    """A rational point of the relative interior: the sum of the rays."""
    total = [Fraction(0)] * cone.rank
    for r in cone.rays:
        total = [t + x for t, x in zip(total, r)]
    return tuple(total)


def faces(cone: Cone) -> List[Cone]:
    """All faces of a pointed cone, ordered by (dimension, rays).

    Faces correspond to intersections of facet ray sets, so the lattice is
    built by closing the facets under intersection.
    """
    if not cone.is_pointed:
        raise NotPointed(f"{cone} is not strictly convex")
    rays = cone.rays
    full = frozenset(range(len(rays)))
    facet_sets = [
        frozenset(i for i, r in enumerate(rays) if dot(n, r) == 0) for n in cone.facet_normals
    ]
    seen = {full}
    queue = [full]
    while queue:
        current = queue.pop()
        for facet in facet_sets:
            smaller = current & facet
            if smaller not in seen:
                seen.add(smaller)
                queue.append(smaller)
    result = [cone_from_rays(cone.rank, [rays[i] for i in sorted(s)]) for s in seen]
    return sorted(result, key=Cone.sort_key)


def is_face_of(tau: Cone, sigma: Cone) -> bool:
    """True when tau is a face of sigma (equal to sigma cut by a supporting hyperplane)."""
    if tau.rank != sigma.rank:
        raise DimensionMismatch(sigma.rank, tau.rank, "cone")
    if not cone_contains_cone(sigma, tau):
        return False
    points = tau.generators()
    tight = [n for n in sigma.facet_normals if all(dot(n, x) == 0 for x in points)]
    smallest = cone_from_inequalities(
        sigma.rank, sigma.facet_normals, list(sigma.span_equations) + tight
    )
    return smallest == tau


def is_smooth(cone: Cone) -> bool:
    """Rays form part of a lattice basis."""
    if not cone.is_pointed:
        raise NotPointed(f"{cone} is not strictly convex")
    if len(cone.rays) != cone.dim:
        return False
    if not cone.rays:
        return True
    return all(f == 1 for f in invariant_factors(cone.rays, cone.rank))


def is_simplicial(cone: Cone) -> bool:
    return cone.is_pointed and len(cone.rays) == cone.dim

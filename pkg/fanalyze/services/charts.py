"""
Affine charts, Laurent polynomials and torus orbits.

The chart of a strictly convex cone σ is described by the semigroup
S_σ = σ^∨ ∩ M: its Hilbert basis gives the chart's coordinates, the lattice
relations between basis elements give its binomial equations, and divisorial
valuations along the rays decide which Laurent polynomials extend.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from fanalyze.errors import (
    ConsistencyError,
    IncompatibleFans,
    NotAFace,
    NotPointed,
    ZeroPolynomial,
)
from fanalyze.geometry.cone import (
    Cone,
    cone_contains_cone,
    cone_from_rays,
    contains,
    dual,
    faces,
    is_face_of,
    relint_point,
)
from fanalyze.geometry.fan import Fan, support_contains, support_subset
from fanalyze.lattice import (
    LatticeVector,
    dot,
    inverse_unimodular,
    invariant_factors,
    is_zero,
    kernel_lattice,
    neg,
    parallelepiped_points,
    primitivize,
    reduce_modulo,
    smith_normal_form,
    sub,
    transpose,
)

logger = logging.getLogger(__name__)

CHART_EQUATIONS_CAVEAT = (
    "binomials from a lattice basis of relations; they cut out the chart on the torus "
    "but need not generate the saturated toric ideal"
)


@dataclass(frozen=True)
class SemigroupBasis:
    """Hilbert basis of S_σ. units lists the invertible generators (± a basis
    of σ^⊥ ∩ M), which occur when σ is not full-dimensional."""

    cone: Cone
    generators: Tuple[LatticeVector, ...]
    units: Tuple[LatticeVector, ...] = ()


@dataclass(frozen=True)
class BinomialEquation:
    """z^a = z^b over the chart generators."""

    a: Tuple[int, ...]
    b: Tuple[int, ...]

    def __post_init__(self):
        if len(self.a) != len(self.b):
            raise ValueError("exponent vectors must have equal length")
        if any(x < 0 for x in self.a + self.b):
            raise ValueError("exponents must be nonnegative")
        if any(x and y for x, y in zip(self.a, self.b)):
            raise ValueError("exponent supports must be disjoint")


@dataclass(frozen=True)
class OrbitRecord:
    cone_id: int
    cone: Cone
    orbit_dim: int
    in_boundary: bool = False
    closure_contains: Tuple[int, ...] = ()


@dataclass(frozen=True)
class ExtensionResult:
    extends: bool
    valuations: Dict[LatticeVector, int] = field(default_factory=dict)


# =============================================================================
# Laurent polynomials
# =============================================================================


@dataclass
class LaurentPoly:
    """Finite sum of a_I t^I with exact rational coefficients.

    Zero coefficients are never stored, so the empty map is the zero
    polynomial and equality is equality of the term maps.
    """

    rank: int
    terms: Dict[LatticeVector, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        cleaned: Dict[LatticeVector, Fraction] = {}
        for exponent, coeff in self.terms.items():
            exponent = tuple(int(x) for x in exponent)
            if len(exponent) != self.rank:
                raise ValueError(f"exponent {exponent} does not have length {self.rank}")
            coeff = Fraction(coeff)
            if coeff != 0:
                cleaned[exponent] = cleaned.get(exponent, Fraction(0)) + coeff
        self.terms = {e: c for e, c in sorted(cleaned.items()) if c != 0}

    @classmethod
    def monomial(cls, exponent: Sequence[int], coeff=1) -> "LaurentPoly":
        return cls(len(exponent), {tuple(exponent): Fraction(coeff)})

    @classmethod
    def constant(cls, rank: int, coeff=1) -> "LaurentPoly":
        return cls(rank, {tuple([0] * rank): Fraction(coeff)})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> List[LatticeVector]:
        return sorted(self.terms)

    def _check(self, other: "LaurentPoly") -> None:
        if self.rank != other.rank:
            raise ValueError(f"rank mismatch: {self.rank} and {other.rank}")

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, Fraction(0)) + c
        return LaurentPoly(self.rank, terms)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.rank, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        terms: Dict[LatticeVector, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                terms[e] = terms.get(e, Fraction(0)) + c1 * c2
        return LaurentPoly(self.rank, terms)


# =============================================================================
# Semigroups and Hilbert bases
# =============================================================================


def _triangulate(cone: Cone) -> List[List[LatticeVector]]:
    """Pulling triangulation of a pointed cone into simplicial ray sets."""
    if len(cone.rays) == cone.dim:
        return [list(cone.rays)]
    apex = cone.rays[0]
    simplices = []
    for facet in faces(cone):
        if facet.dim == cone.dim - 1 and not contains(facet, apex).inside:
            for simplex in _triangulate(facet):
                simplices.append(simplex + [apex])
    return simplices


def _pointed_hilbert_basis(rank: int, rays: Sequence[LatticeVector]) -> List[LatticeVector]:
    """Hilbert basis of Cone(rays) ∩ Z^rank for a pointed cone."""
    cone = cone_from_rays(rank, rays)
    candidates = set(cone.rays)
    for simplex in _triangulate(cone):
        for point, _ in parallelepiped_points(simplex, rank):
            if not is_zero(point):
                candidates.add(point)
    basis = [
        c
        for c in candidates
        if not any(h != c and contains(cone, sub(c, h)).inside for h in candidates)
    ]
    return sorted(basis)


def hilbert_basis(cone: Cone) -> SemigroupBasis:
    """Minimal generating set of σ^∨ ∩ M, lexicographically sorted.

    When σ is not full-dimensional the dual contains the line space σ^⊥; its
    lattice contributes ± an HNF basis as units and the remaining generators
    are lifted from the quotient M / (σ^⊥ ∩ M) and reduced modulo the units.

    Example:
        >>> hilbert_basis(cone_from_rays(2, [(1, 0), (1, 2)])).generators
        ((0, 1), (1, 0), (2, -1))
    """
    if not cone.is_pointed:
        raise NotPointed(f"{cone} is not strictly convex")
    rank = cone.rank
    dual_cone = dual(cone)
    units_basis = list(dual_cone.lineality_basis)
    if not units_basis:
        generators = _pointed_hilbert_basis(rank, dual_cone.rays)
        return SemigroupBasis(cone=cone, generators=tuple(generators))

    k = len(units_basis)
    _, _, T = smith_normal_form(units_basis, rank)
    T_inv = inverse_unimodular(T)
    T_cols = transpose(T)

    def to_quotient(x: Sequence[int]) -> LatticeVector:
        return tuple(dot(x, T_cols[j]) for j in range(k, rank))

    units = units_basis + [neg(u) for u in units_basis]
    lifted = []
    if rank > k:
        projected = [primitivize(to_quotient(r))[0] for r in dual_cone.rays]
        for h in _pointed_hilbert_basis(rank - k, projected):
            y = [0] * k + list(h)
            x = tuple(sum(y[i] * T_inv[i][j] for i in range(rank)) for j in range(rank))
            lifted.append(reduce_modulo(x, units_basis))
    generators = sorted(set(lifted) | set(units))
    logger.debug("Hilbert basis of %s: %d generators, %d units", cone, len(generators), len(units))
    return SemigroupBasis(cone=cone, generators=tuple(generators), units=tuple(sorted(units)))


def in_semigroup(cone: Cone, m: Sequence[int]) -> bool:
    """m ∈ S_σ; the semigroup is saturated so this is membership in σ^∨."""
    return contains(dual(cone), m).inside


def generates_lattice(basis: SemigroupBasis) -> bool:
    """S_σ + (−S_σ) = M: the generators span Z^rank as a group."""
    rank = basis.cone.rank
    if not basis.generators:
        return rank == 0
    factors = invariant_factors(basis.generators, rank)
    return len(factors) == rank and all(f == 1 for f in factors)


def chart_equations(cone: Cone) -> List[BinomialEquation]:
    """Binomial relations z^a = z^b among the Hilbert basis generators.

    Each kernel vector of the generator matrix is split into its positive and
    negative parts. See CHART_EQUATIONS_CAVEAT for what these cut out.
    """
    generators = hilbert_basis(cone).generators
    if not generators:
        return []
    matrix = [[g[i] for g in generators] for i in range(cone.rank)]
    equations = []
    for k in kernel_lattice(matrix, len(generators)):
        a = tuple(max(x, 0) for x in k)
        b = tuple(max(-x, 0) for x in k)
        equations.append(BinomialEquation(a=a, b=b))
    return equations


def face_localization(sigma: Cone, tau: Cone) -> LatticeVector:
    """m0 in S_σ with τ = σ ∩ m0^⊥: the sum of the Hilbert basis elements
    vanishing on τ."""
    if not is_face_of(tau, sigma):
        raise NotAFace(f"{tau} is not a face of {sigma}")
    m0 = [0] * sigma.rank
    for h in hilbert_basis(sigma).generators:
        if all(dot(h, r) == 0 for r in tau.rays):
            m0 = [x + y for x, y in zip(m0, h)]
    return tuple(m0)


# =============================================================================
# Valuations and extension
# =============================================================================


def valuation_monomial(ray: Sequence[int], exponent: Sequence[int]) -> int:
    """v_ρ(t^I) = <u_ρ, I> with u_ρ the primitive generator of ρ."""
    u, _ = primitivize(ray)
    return dot(u, exponent)


def valuation_poly(ray: Sequence[int], f: LaurentPoly) -> int:
    """Least valuation over the monomials of f."""
    if f.is_zero:
        raise ZeroPolynomial("the zero polynomial has no valuation")
    return min(valuation_monomial(ray, e) for e in f.terms)


def support_dual(fan: Fan) -> Cone:
    """|Σ|^∨ = {I : <u_ρ, I> >= 0 for every ray ρ}."""
    return dual(cone_from_rays(fan.rank, fan.ray_generators))


def extends_to_variety(fan: Fan, f: LaurentPoly) -> ExtensionResult:
    """Decide whether f extends to a regular function on the toric variety.

    Checked twice: by the valuations along the rays and by membership of the
    exponents in |Σ|^∨.
    """
    if f.is_zero:
        raise ZeroPolynomial("the zero polynomial has no valuation")
    valuations = {ray: valuation_poly(ray, f) for ray in fan.ray_generators}
    by_valuation = all(v >= 0 for v in valuations.values())
    cone = support_dual(fan)
    by_exponents = all(contains(cone, e).inside for e in f.terms)
    logger.debug("Extension test: valuations %s, exponents %s", by_valuation, by_exponents)
    if by_valuation != by_exponents:
        raise ConsistencyError(
            f"valuation test ({by_valuation}) and exponent test ({by_exponents}) disagree"
        )
    return ExtensionResult(extends=by_valuation, valuations=valuations)


# =============================================================================
# Orbits
# =============================================================================


def orbit_report(fan: Fan, relative_to: Optional[Fan] = None) -> List[OrbitRecord]:
    """One record per cone: orbit dimension, boundary flag and the orbits in
    the closure of this orbit (cones having this cone as a face).

    With relative_to, a cone is in the boundary when its relative interior
    misses the support of relative_to.

    Raises:
        IncompatibleFans: relative_to has another rank or is not supported in the fan
    """
    if relative_to is not None:
        if relative_to.rank != fan.rank:
            raise IncompatibleFans(f"ranks differ: {fan.rank} and {relative_to.rank}")
        if not support_subset(relative_to, fan):
            raise IncompatibleFans("the reference fan's support is not contained in the fan")
    records = []
    cones = fan.all_cones
    for i, cone in enumerate(cones):
        boundary = False
        if relative_to is not None:
            boundary = not support_contains(relative_to, relint_point(cone))
        above = tuple(j for j, other in enumerate(cones) if cone_contains_cone(other, cone))
        records.append(
            OrbitRecord(
                cone_id=i,
                cone=cone,
                orbit_dim=fan.rank - cone.dim,
                in_boundary=boundary,
                closure_contains=above,
            )
        )
    return records


def chart_orbits(fan: Fan, cone: Cone) -> List[int]:
    """Ids of the orbits making up the affine chart of a cone: its faces."""
    if cone not in fan.all_cones:
        raise ValueError(f"{cone} is not a cone of the fan")
    return [i for i, other in enumerate(fan.all_cones) if cone_contains_cone(cone, other)]


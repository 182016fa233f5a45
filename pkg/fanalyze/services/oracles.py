"""
Brute-force and randomized oracles.

Nothing in the production path calls these. They recompute quantities from
definitions (pointwise dual tests, exhaustive semigroup enumeration,
sampling of the complement, Fourier-Motzkin elimination) so that tests and
the hidden --with-oracles flag can cross-check the exact algorithms.
"""

import logging
import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Dict, List, Optional, Sequence, Set, Tuple

import numpy as np

from fanalyze.config import OracleConfig, get_oracle_config
from fanalyze.geometry.complement import ComplementAnalysis
from fanalyze.geometry.cone import Cone, contains, dual
from fanalyze.geometry.fan import Fan
from fanalyze.lattice import (
    LatticeVector,
    dot,
    is_zero,
    neg,
    reduce_modulo,
    saturated_basis,
    sub,
    sup_norm,
)
from fanalyze.utils import DisjointSet

logger = logging.getLogger(__name__)

_TOLERANCE = 1e-12


@dataclass(frozen=True)
class SamplingEstimate:
    count: int
    stable: bool
    sample_count: int


def _box(rank: int, bound: int):
    return product(range(-bound, bound + 1), repeat=rank)


def dual_lattice_oracle(cone: Cone, bound: int) -> Set[LatticeVector]:
    """Lattice points with max |I_i| <= bound that are nonnegative on every ray
    and orthogonal to every lineality generator."""
    return {
        point
        for point in _box(cone.rank, bound)
        if all(dot(point, r) >= 0 for r in cone.rays)
        and all(dot(point, v) == 0 for v in cone.lineality_basis)
    }


def hilbert_bruteforce(cone: Cone, bound: int) -> Set[LatticeVector]:
    """Irreducible elements of the bounded part of σ^∨ ∩ M.

    Units (points vanishing on σ) are factored out: a non-unit is reducible
    when it is a sum of two non-units, and irreducible classes are reported
    by their representative reduced modulo the unit lattice, together with
    ± an HNF basis of the units.
    """
    generators = list(cone.rays) + list(cone.lineality_basis) + [neg(v) for v in cone.lineality_basis]

    def in_dual(m) -> bool:
        return all(dot(m, g) >= 0 for g in generators)

    def is_unit(m) -> bool:
        return all(dot(m, g) == 0 for g in generators)

    points = [m for m in _box(cone.rank, bound) if in_dual(m)]
    unit_basis = saturated_basis([m for m in points if is_unit(m)], cone.rank)
    non_units = [m for m in points if not is_unit(m)]

    result: Set[LatticeVector] = set()
    for c in non_units:
        reducible = any(
            a != c and in_dual(sub(c, a)) and not is_unit(sub(c, a)) for a in non_units
        )
        if not reducible:
            result.add(reduce_modulo(c, unit_basis))
    for u in unit_basis:
        result.add(tuple(u))
        result.add(neg(u))
    return result


def fourier_motzkin_contains(generators: Sequence[Sequence[int]], x: Sequence[int]) -> bool:
    """Decide x ∈ Cone(generators) by eliminating the multipliers.

    The system sum(l_j g_j) = x, l >= 0 is written as inequalities a.l <= b and
    the l_j are eliminated one at a time; x is in the cone exactly when the
    remaining variable-free inequalities hold.
    """
    k = len(generators)
    if k == 0:
        return is_zero(x)
    rank = len(x)
    rows: Set[Tuple[Tuple[Fraction, ...], Fraction]] = set()

    def add_row(a, b):
        scale = max(abs(v) for v in list(a) + [b]) or Fraction(1)
        rows.add((tuple(Fraction(v) / scale for v in a), Fraction(b) / scale))

    for i in range(rank):
        coeffs = [g[i] for g in generators]
        add_row(coeffs, x[i])
        add_row([-c for c in coeffs], -x[i])
    for j in range(k):
        add_row([-1 if i == j else 0 for i in range(k)], 0)

    for j in range(k):
        upper = [(a, b) for a, b in rows if a[j] > 0]
        lower = [(a, b) for a, b in rows if a[j] < 0]
        kept = {(a, b) for a, b in rows if a[j] == 0}
        rows = set()
        for a, b in kept:
            add_row(a, b)
        for ap, bp in upper:
            for an, bn in lower:
                cp, cn = -an[j], ap[j]
                a = [cp * u + cn * v for u, v in zip(ap, an)]
                add_row(a, cp * bp + cn * bn)
    return all(b >= 0 for _, b in rows)


def representable_points(
    generators: Sequence[Sequence[int]], box: int
) -> Set[LatticeVector]:
    """Nonnegative integer combinations of the generators whose partial sums
    stay within max |x_i| <= box."""
    if not generators:
        return set()
    start = tuple([0] * len(generators[0]))
    seen = {start}
    queue = deque([start])
    while queue:
        current = queue.popleft()
        for g in generators:
            nxt = tuple(a + b for a, b in zip(current, g))
            if sup_norm(nxt) <= box and nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return seen


# =============================================================================
# Sampling the complement
# =============================================================================


def _inside_mask(fan: Fan, points: np.ndarray) -> np.ndarray:
    inside = np.zeros(len(points), dtype=bool)
    for cone in fan.max_cones:
        ok = np.ones(len(points), dtype=bool)
        for e in cone.span_equations:
            ok &= np.abs(points @ np.asarray(e, dtype=float)) <= _TOLERANCE
        for n in cone.facet_normals:
            ok &= points @ np.asarray(n, dtype=float) >= -_TOLERANCE
        inside |= ok
    return inside


def _segments_blocked(fan: Fan, starts: np.ndarray, ends: np.ndarray) -> np.ndarray:
    """For each segment [start, end], whether it meets a cone of codimension <= 1."""
    blocked = np.zeros(len(starts), dtype=bool)
    direction = ends - starts
    for cone in fan.max_cones:
        if cone.dim < fan.rank - 1:
            continue
        lo = np.zeros(len(starts))
        hi = np.ones(len(starts))
        ok = np.ones(len(starts), dtype=bool)
        for e in cone.span_equations:
            vec = np.asarray(e, dtype=float)
            at_start, slope = starts @ vec, direction @ vec
            flat = np.abs(slope) <= _TOLERANCE
            ok &= ~flat | (np.abs(at_start) <= _TOLERANCE)
            t = np.where(flat, 0.0, -at_start / np.where(flat, 1.0, slope))
            lo = np.where(flat, lo, np.maximum(lo, t))
            hi = np.where(flat, hi, np.minimum(hi, t))
        for n in cone.facet_normals:
            vec = np.asarray(n, dtype=float)
            at_start, slope = starts @ vec, direction @ vec
            rising = slope > _TOLERANCE
            falling = slope < -_TOLERANCE
            safe = np.where(rising | falling, slope, 1.0)
            t = -at_start / safe
            lo = np.where(rising, np.maximum(lo, t), lo)
            hi = np.where(falling, np.minimum(hi, t), hi)
            ok &= rising | falling | (at_start >= -_TOLERANCE)
        blocked |= ok & (lo <= hi + 1e-9)
    return blocked


def _sample_components(fan: Fan, sample_count: int, seed: int) -> int:
    rng = np.random.default_rng(seed)
    points = rng.normal(size=(sample_count, fan.rank))
    points /= np.linalg.norm(points, axis=1, keepdims=True)
    outside = points[~_inside_mask(fan, points)]
    if len(outside) == 0:
        return 0
    # wide enough to cover the largest gap between samples with high probability
    spread = math.log(sample_count) + 4.0
    if fan.rank == 2:
        threshold = 2.0 * math.pi * spread / sample_count
    else:
        threshold = 2.0 * math.sqrt(4.0 * spread / sample_count)
    cos_threshold = math.cos(threshold)

    groups = DisjointSet(range(len(outside)))
    chunk = 512
    for start in range(0, len(outside), chunk):
        block = outside[start : start + chunk] @ outside.T
        rows, cols = np.nonzero(block > cos_threshold)
        rows = rows + start
        keep = rows < cols
        rows, cols = rows[keep], cols[keep]
        if len(rows) == 0:
            continue
        blocked = _segments_blocked(fan, outside[rows], outside[cols])
        for i, j in zip(rows[~blocked], cols[~blocked]):
            groups.union(int(i), int(j))
    return len(groups.groups())


def component_sampling_oracle(fan: Fan, cfg: Optional[OracleConfig] = None) -> SamplingEstimate:
    """Estimate the number of complement components by sampling directions.

    Samples closer than a resolution threshold are linked unless the segment
    between them crosses the support. The estimate is stable when doubling
    the sample count does not change it.
    """
    if fan.rank not in (2, 3):
        raise ValueError(f"sampling oracle supports rank 2 and 3, got {fan.rank}")
    cfg = cfg or get_oracle_config()
    count = _sample_components(fan, cfg.sample_count, cfg.seed)
    doubled = _sample_components(fan, 2 * cfg.sample_count, cfg.seed)
    logger.debug("Sampling oracle: %d components (doubled: %d)", count, doubled)
    return SamplingEstimate(count=count, stable=count == doubled, sample_count=cfg.sample_count)


# =============================================================================
# Report section
# =============================================================================


def oracle_report(analysis: ComplementAnalysis, cfg: Optional[OracleConfig] = None) -> Dict:
    """Oracle comparison section for the analysis report."""
    cfg = cfg or get_oracle_config()
    fan = analysis.fan
    dual_checks: List[bool] = []
    for cone in fan.max_cones:
        d = dual(cone)
        exact = {p for p in _box(fan.rank, cfg.lattice_bound) if contains(d, p).inside}
        dual_checks.append(exact == dual_lattice_oracle(cone, cfg.lattice_bound))
    section: Dict = {
        "seed": cfg.seed,
        "lattice_bound": cfg.lattice_bound,
        "duals_agree": all(dual_checks),
    }
    if fan.rank in (2, 3):
        estimate = component_sampling_oracle(fan, cfg)
        section["sampled_components"] = estimate.count
        section["sampling_stable"] = estimate.stable
        section["components_agree"] = estimate.count == analysis.n
    return section


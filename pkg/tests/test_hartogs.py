"""
Tests for Hartogs verdicts, compactly supported cohomology and obstruction
exponents, including the invariance suites over random fans.

To run: pytest tests/test_hartogs.py -v
"""

import random

import pytest

from fanalyze.errors import ComplementNotConnected, RankTooSmall
from fanalyze.geometry.complement import complement_components
from fanalyze.geometry.fan import (
    fan_from_max_cones,
    is_complete,
    is_smooth_fan,
    is_subdivision,
    stellar_subdivide,
    transform_fan,
)
from fanalyze.lattice import matvec, sup_norm
from fanalyze.services.hartogs import (
    HartogsVerdict,
    Verdict,
    h1c_trivial,
    hartogs_verdict,
    obstruction_exponents,
)
from tests import corpus


class TestVerdict:
    def test_tetra_fan_holds(self, tetra_fan):
        verdict = hartogs_verdict(tetra_fan)
        assert verdict.verdict is Verdict.HOLDS
        assert verdict.witness_component == 0
        assert verdict.n == 2
        assert verdict.h1c_trivial is None

    def test_half_plane_fails(self, half_plane_fan):
        verdict = hartogs_verdict(half_plane_fan)
        assert verdict.verdict is Verdict.FAILS
        assert verdict.h1c_trivial is False
        assert verdict.witness_component is None

    def test_opposite_quadrants_unknown(self, opposite_quadrants_fan):
        verdict = hartogs_verdict(opposite_quadrants_fan)
        assert verdict.verdict is Verdict.UNKNOWN
        assert verdict.n == 2

    def test_complete_fan_is_compact(self, projective_plane_fan):
        verdict = hartogs_verdict(projective_plane_fan)
        assert verdict.verdict is Verdict.NOT_APPLICABLE_COMPACT
        assert verdict.n == 0

    @pytest.mark.parametrize("rank", [2, 3, 4])
    def test_classical_hartogs(self, rank):
        fan = corpus.orthant_fan(rank)
        verdict = hartogs_verdict(fan)
        assert verdict.verdict is Verdict.HOLDS
        assert verdict.n == 1
        assert verdict.h1c_trivial is True
        assert obstruction_exponents(fan, 8).is_empty

    def test_torus_holds(self, torus_fan):
        assert hartogs_verdict(torus_fan).verdict is Verdict.HOLDS

    def test_rank_one_rejected(self):
        with pytest.raises(RankTooSmall):
            hartogs_verdict(fan_from_max_cones(1, [(1,)], [[0]]))

    def test_basis_is_reported(self, tetra_fan, half_plane_fan):
        assert "concave" in hartogs_verdict(tetra_fan).basis
        assert hartogs_verdict(half_plane_fan).basis

    def test_reuses_given_analysis(self, tetra_fan):
        analysis = complement_components(tetra_fan)
        assert hartogs_verdict(tetra_fan, analysis).n == analysis.n

    def test_witness_requires_holds(self):
        with pytest.raises(ValueError, match="witness"):
            HartogsVerdict(Verdict.FAILS, n=1, witness_component=0, h1c_trivial=False)

    def test_h1c_only_for_connected_complement(self):
        with pytest.raises(ValueError, match="n = 1"):
            HartogsVerdict(Verdict.UNKNOWN, n=2, h1c_trivial=False)


class TestCohomology:
    def test_orthant(self, orthant_fan):
        assert h1c_trivial(orthant_fan)

    def test_half_plane(self, half_plane_fan):
        assert not h1c_trivial(half_plane_fan)

    def test_disconnected_complement(self, tetra_fan):
        with pytest.raises(ComplementNotConnected, match="2 components"):
            h1c_trivial(tetra_fan)


class TestObstructionExponents:
    def test_half_plane(self, half_plane_fan):
        result = obstruction_exponents(half_plane_fan, 3)
        assert result.bound == 3
        assert result.exponents == ((0, -3), (0, -2), (0, -1))

    def test_orthant(self, orthant_fan):
        assert obstruction_exponents(orthant_fan, 5).exponents == ()

    def test_torus(self, torus_fan):
        assert obstruction_exponents(torus_fan, 2).is_empty

    def test_bound_must_be_positive(self, half_plane_fan):
        with pytest.raises(ValueError, match="at least 1"):
            obstruction_exponents(half_plane_fan, 0)

    def test_disconnected_complement(self, opposite_quadrants_fan):
        with pytest.raises(ComplementNotConnected):
            obstruction_exponents(opposite_quadrants_fan, 2)

    def test_wedge_complement(self):
        # the complement of a 270 degree fan is the open fourth quadrant
        fan = fan_from_max_cones(
            2, [(1, 0), (0, 1), (-1, 0), (0, -1)], [[0, 1], [1, 2], [2, 3]]
        )
        result = obstruction_exponents(fan, 1)
        assert result.exponents == ((0, -1), (1, -1), (1, 0))


class TestInvariants:
    @pytest.mark.parametrize("seed", range(25))
    def test_verdicts_partition_and_agree(self, seed):
        fan = corpus.random_fan(random.Random(seed))
        analysis = complement_components(fan)
        verdict = hartogs_verdict(fan, analysis)
        concave = [c.id for c in analysis.components if c.concave]

        assert (analysis.n == 0) == is_complete(fan)
        if analysis.n == 0:
            assert verdict.verdict is Verdict.NOT_APPLICABLE_COMPACT
        elif concave:
            assert verdict.verdict is Verdict.HOLDS
            assert verdict.witness_component == min(concave)
        elif analysis.n == 1:
            assert verdict.verdict is Verdict.FAILS
        else:
            assert verdict.verdict is Verdict.UNKNOWN

        if analysis.n == 1:
            trivial = h1c_trivial(fan, analysis)
            assert (verdict.verdict is Verdict.HOLDS) == trivial
            sets = [obstruction_exponents(fan, b, analysis) for b in range(1, 9)]
            for smaller, larger in zip(sets, sets[1:]):
                assert set(smaller.exponents) <= set(larger.exponents)
            assert all(s.is_empty for s in sets) == trivial
            if not trivial:
                generator = analysis.components[0].closure_dual.generators()[0]
                reach = obstruction_exponents(fan, sup_norm(generator), analysis)
                assert generator in reach.exponents

    @pytest.mark.parametrize("rank", [2, 3])
    @pytest.mark.parametrize("seed", range(100))
    def test_unimodular_invariance(self, seed, rank):
        rng = random.Random(1000 * rank + seed)
        fan = corpus.random_fan(rng, rank=rank)
        matrix = corpus.random_unimodular(rng, rank)
        image = transform_fan(fan, matrix)

        assert len(image.all_cones) == len(fan.all_cones)
        assert is_complete(fan) == is_complete(image)
        before, after = complement_components(fan), complement_components(image)
        assert before.n == after.n
        assert hartogs_verdict(fan, before).verdict is hartogs_verdict(image, after).verdict
        assert sorted(c.concave for c in before.components) == sorted(
            c.concave for c in after.components
        )
        assert is_smooth_fan(fan).smooth == is_smooth_fan(image).smooth

        top = fan.max_cones[-1]
        if top.dim >= 2:
            ray = tuple(sum(column) for column in zip(*top.rays))
            subdivided = stellar_subdivide(fan, ray)
            moved = transform_fan(subdivided, matrix)
            assert moved == stellar_subdivide(image, matvec(matrix, ray))
            assert is_subdivision(moved, image)

    def test_adding_cones_beside_the_witness(self):
        base = corpus.two_rays_fan()
        assert hartogs_verdict(base).verdict is Verdict.HOLDS
        enlarged = [
            fan_from_max_cones(2, [(1, 0), (0, 1), (1, 1)], [[0], [1], [2]]),
            fan_from_max_cones(2, [(1, 0), (0, 1), (1, 1)], [[0, 2], [1]]),
        ]
        for fan in enlarged:
            assert hartogs_verdict(fan).verdict is Verdict.HOLDS

"""
Tests for exact integer linear algebra (no floats anywhere).

Smith forms and ranks are cross-checked against sympy on random matrices.

To run: pytest tests/test_lattice.py -v
"""

import random
from fractions import Fraction
from itertools import combinations
from math import gcd

import pytest
from sympy import ZZ, Matrix
from sympy.matrices.normalforms import smith_normal_form as sympy_smith

from fanalyze.errors import DimensionMismatch, ZeroVector
from fanalyze.lattice import (
    dot,
    hermite_normal_form,
    integerize,
    invariant_factors,
    inverse_unimodular,
    kernel_lattice,
    matmul,
    matvec,
    parallelepiped_points,
    primitivize,
    project_to_complement,
    rank,
    reduce_modulo,
    saturated_basis,
    smith_normal_form,
    solve_rational,
)


def _random_matrix(rng, rows, cols, bound=4):
    return [[rng.randint(-bound, bound) for _ in range(cols)] for _ in range(rows)]


def _diagonal(D):
    return [D[i][i] for i in range(min(len(D), len(D[0])))]


def _det(M):
    """Fraction-free Bareiss determinant."""
    M = [list(row) for row in M]
    n = len(M)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if M[i][k] != 0), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def _determinantal_factors(A):
    """Invariant factors as ratios of gcds of k-minors."""
    m, n = len(A), len(A[0])
    divisors = [1]
    for k in range(1, min(m, n) + 1):
        g = 0
        for rows in combinations(range(m), k):
            for cols in combinations(range(n), k):
                g = gcd(g, _det([[A[i][j] for j in cols] for i in rows]))
        if g == 0:
            break
        divisors.append(g)
    return [b // a for a, b in zip(divisors, divisors[1:])]


class TestPrimitivize:
    def test_gcd_division(self):
        assert primitivize((2, 4, 6)) == ((1, 2, 3), 2)

    def test_sign_kept(self):
        assert primitivize((0, -5)) == ((0, -1), 5)

    def test_already_primitive(self):
        assert primitivize((3, 7)) == ((3, 7), 1)

    def test_zero_vector(self):
        with pytest.raises(ZeroVector):
            primitivize((0, 0))

    def test_integerize_clears_denominators(self):
        assert integerize((Fraction(1, 2), Fraction(-3, 4))) == (2, -3)

    def test_dot_length_mismatch(self):
        with pytest.raises(DimensionMismatch, match="length 3, expected 2"):
            dot((1, 2), (1, 2, 3))


class TestSmithNormalForm:
    def test_identity(self):
        D, _, _ = smith_normal_form([[1, 0], [0, 1]])
        assert D == [[1, 0], [0, 1]]

    def test_two_by_three(self):
        D, _, _ = smith_normal_form([[1, 1, 1], [1, -1, -1]])
        assert D == [[1, 0, 0], [0, 2, 0]]

    def test_three_by_two(self):
        D, _, _ = smith_normal_form([[1, 0], [0, 1], [1, 1]])
        assert D == [[1, 0], [0, 1], [0, 0]]

    def test_negative_entry_gives_positive_factor(self):
        D, U, V = smith_normal_form([[0, -2]])
        assert D == [[2, 0]]
        assert matmul(matmul(U, [[0, -2]]), V) == D

    def test_entries_are_python_ints(self):
        D, U, V = smith_normal_form([[2, 4], [6, 8]])
        for M in (D, U, V):
            assert all(type(x) is int for row in M for x in row)

    def test_no_rows(self):
        D, U, V = smith_normal_form([], 2)
        assert D == [] and U == []
        assert len(V) == 2 and abs(_det(V)) == 1

    def test_invariant_factors(self):
        assert invariant_factors([[1, 0], [1, 2]]) == [1, 2]
        assert invariant_factors([[2, 4], [6, 8]]) == [2, 4]

    @pytest.mark.parametrize("seed", range(500))
    def test_random_matrices_factor_correctly(self, seed):
        rng = random.Random(seed)
        A = _random_matrix(rng, rng.randint(1, 5), rng.randint(1, 5), bound=9)
        D, U, V = smith_normal_form(A)

        assert matmul(matmul(U, A), V) == D
        assert abs(_det(U)) == 1
        assert abs(_det(V)) == 1
        for i, row in enumerate(D):
            for j, x in enumerate(row):
                if i != j:
                    assert x == 0
        diagonal = _diagonal(D)
        assert all(d >= 0 for d in diagonal)
        nonzero = [d for d in diagonal if d]
        assert diagonal[: len(nonzero)] == nonzero
        for a, b in zip(nonzero, nonzero[1:]):
            assert b % a == 0
        assert nonzero == _determinantal_factors(A)

    @pytest.mark.parametrize("seed", range(30))
    def test_agrees_with_sympy(self, seed):
        rng = random.Random(1000 + seed)
        n = rng.randint(1, 4)
        while True:
            A = _random_matrix(rng, n, n)
            if Matrix(A).det() != 0:
                break
        ours = _diagonal(smith_normal_form(A)[0])
        theirs = sympy_smith(Matrix(A), domain=ZZ)
        assert ours == [abs(theirs[i, i]) for i in range(n)]


class TestHermiteNormalForm:
    def test_identity(self):
        assert hermite_normal_form([[1, 0], [0, 1]])[0] == [[1, 0], [0, 1]]

    def test_reordering(self):
        assert hermite_normal_form([[0, 2], [2, 0]])[0] == [[2, 0], [0, 2]]

    def test_reduction_above_pivot(self):
        assert hermite_normal_form([[2, 4], [1, 1]])[0] == [[1, 1], [0, 2]]

    @pytest.mark.parametrize("seed", range(20))
    def test_transform_is_unimodular(self, seed):
        rng = random.Random(seed)
        A = _random_matrix(rng, 3, 3)
        H, U = hermite_normal_form(A)
        assert matmul(U, A) == H
        assert abs(Matrix(U).det()) == 1


class TestRankAndKernel:
    @pytest.mark.parametrize("seed", range(20))
    def test_rank_agrees_with_sympy(self, seed):
        rng = random.Random(seed)
        A = _random_matrix(rng, rng.randint(1, 4), rng.randint(1, 4), bound=2)
        assert rank(A) == Matrix(A).rank()

    def test_kernel_of_identity(self):
        assert kernel_lattice([[1, 0], [0, 1]]) == []

    def test_kernel_of_a1_generators(self):
        # columns (0,1), (1,0), (2,-1)
        assert kernel_lattice([[0, 1, 2], [1, 0, -1]]) == [(1, -2, 1)]

    def test_kernel_of_zero_matrix(self):
        assert kernel_lattice([[0, 0]]) == [(1, 0), (0, 1)]

    @pytest.mark.parametrize("seed", range(20))
    def test_kernel_vectors_solve_and_span(self, seed):
        rng = random.Random(seed)
        A = _random_matrix(rng, 2, 4, bound=3)
        basis = kernel_lattice(A)
        assert len(basis) == 4 - rank(A)
        for k in basis:
            assert matvec(A, k) == (0, 0)
        # the basis is saturated: its invariant factors are all 1
        if basis:
            assert invariant_factors(basis) == [1] * len(basis)

    def test_saturated_basis(self):
        assert saturated_basis([(2, 2)], 2) == [(1, 1)]
        assert saturated_basis([(0, 0)], 2) == []


class TestSolveRational:
    def test_identity(self):
        assert solve_rational([[1, 0], [0, 1]], [3, -2]) == (3, -2)

    def test_free_variable_set_to_zero(self):
        assert solve_rational([[1, 1]], [1]) == (Fraction(1), Fraction(0))

    def test_inconsistent(self):
        assert solve_rational([[1, 0], [1, 0]], [1, 2]) is None

    def test_inverse_unimodular(self):
        U = [[2, 1], [1, 1]]
        assert matmul(U, inverse_unimodular(U)) == [[1, 0], [0, 1]]

    def test_rational_entries(self):
        A = [[Fraction(1, 2), 0], [0, Fraction(2, 3)]]
        assert solve_rational(A, [1, Fraction(1, 3)]) == (Fraction(2), Fraction(1, 2))

    def test_inverse_rejects_singular(self):
        with pytest.raises(ValueError, match="not unimodular"):
            inverse_unimodular([[1, 2], [2, 4]])

    def test_inverse_rejects_non_unimodular(self):
        with pytest.raises(ValueError, match="not unimodular"):
            inverse_unimodular([[2, 0], [0, 1]])

    def test_projection(self):
        assert project_to_complement((1, 1), [(1, 0)]) == (0, 1)


class TestParallelepiped:
    def test_unimodular_has_only_origin(self):
        assert parallelepiped_points([(1, 0), (0, 1)], 2) == [((0, 0), (0, 0))]

    def test_a1_cone(self):
        points = parallelepiped_points([(1, 0), (1, 2)], 2)
        assert [p for p, _ in points] == [(0, 0), (1, 1)]
        assert points[1][1] == (Fraction(1, 2), Fraction(1, 2))

    @pytest.mark.parametrize("seed", range(15))
    def test_count_is_product_of_invariant_factors(self, seed):
        rng = random.Random(seed)
        while True:
            gens = _random_matrix(rng, 2, 3, bound=3)
            if rank(gens) == 2:
                break
        points = parallelepiped_points(gens, 3)
        expected = 1
        for f in invariant_factors(gens):
            expected *= f
        assert len(points) == expected
        for _, coeffs in points:
            assert all(0 <= c < 1 for c in coeffs)

    def test_dependent_generators_rejected(self):
        with pytest.raises(ValueError, match="linearly independent"):
            parallelepiped_points([(1, 1), (2, 2)], 2)

    def test_reduce_modulo(self):
        assert reduce_modulo((3, 7), [(0, 1)]) == (3, 0)
        assert reduce_modulo((3, -7), [(0, 2)]) == (3, 1)

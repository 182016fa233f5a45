"""
Exact integer and rational linear algebra.

Vectors are tuples of Python ints (lattice vectors) or Fractions (rational
vectors); matrices are sequences of row tuples. Nothing here ever touches a
float. Rank, row reduction, inversion and the Smith form run on sympy
DomainMatrix over ZZ and QQ; results come back as plain ints and Fractions.

Normal forms follow these conventions:
    smith_normal_form(A) -> (D, U, V) with D = U A V, U and V unimodular and
        the diagonal d1 | d2 | ... nonnegative.
    hermite_normal_form(A) -> (H, U) with H = U A in row style: pivots
        positive, entries above a pivot reduced into [0, pivot), zero rows last.
"""

from fractions import Fraction
from itertools import product
from math import floor, gcd
from typing import List, Optional, Sequence, Tuple

from sympy.polys.domains import QQ, ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError
from sympy.polys.matrices.normalforms import smith_normal_decomp

from fanalyze.errors import DimensionMismatch, ZeroVector

LatticeVector = Tuple[int, ...]
RationalVector = Tuple[Fraction, ...]
IntMatrix = List[List[int]]


# =============================================================================
# Vector helpers
# =============================================================================


def dot(a: Sequence, b: Sequence):
    if len(a) != len(b):
        raise DimensionMismatch(len(a), len(b))
    return sum(x * y for x, y in zip(a, b))


def neg(v: Sequence) -> tuple:
    return tuple(-x for x in v)


def add(a: Sequence, b: Sequence) -> tuple:
    if len(a) != len(b):
        raise DimensionMismatch(len(a), len(b))
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Sequence, b: Sequence) -> tuple:
    if len(a) != len(b):
        raise DimensionMismatch(len(a), len(b))
    return tuple(x - y for x, y in zip(a, b))


def scale(c, v: Sequence) -> tuple:
    return tuple(c * x for x in v)


def combine(c1, a: Sequence, c2, b: Sequence) -> tuple:
    """Return c1*a + c2*b."""
    return tuple(c1 * x + c2 * y for x, y in zip(a, b))


def is_zero(v: Sequence) -> bool:
    return all(x == 0 for x in v)


def sup_norm(v: Sequence) -> int:
    return max((abs(x) for x in v), default=0)


def content(v: Sequence[int]) -> int:
    """gcd of the entries (0 for the zero vector)."""
    g = 0
    for x in v:
        g = gcd(g, int(x))
    return g


def primitivize(v: Sequence[int]) -> Tuple[LatticeVector, int]:
    """Split v into (primitive vector, positive scale) with v = scale * primitive."""
    g = content(v)
    if g == 0:
        raise ZeroVector("cannot primitivize the zero vector")
    return tuple(int(x) // g for x in v), g


def integerize(v: Sequence) -> LatticeVector:
    """Clear denominators of a rational vector and make it primitive.

    The zero vector is returned unchanged.
    """
    den = 1
    for x in v:
        den = den * Fraction(x).denominator // gcd(den, Fraction(x).denominator)
    ints = tuple(int(Fraction(x) * den) for x in v)
    if is_zero(ints):
        return ints
    return primitivize(ints)[0]


def unit_vector(rank: int, i: int) -> LatticeVector:
    return tuple(1 if j == i else 0 for j in range(rank))


# =============================================================================
# Matrix helpers
# =============================================================================


def identity(n: int) -> IntMatrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(A: Sequence[Sequence], ncols: Optional[int] = None) -> List[list]:
    if not A:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*A)]


def matmul(A: Sequence[Sequence], B: Sequence[Sequence]) -> List[list]:
    Bt = transpose(B)
    return [[dot(row, col) for col in Bt] for row in A]


def matvec(A: Sequence[Sequence], v: Sequence) -> tuple:
    return tuple(dot(row, v) for row in A)


def _ncols(A: Sequence[Sequence], ncols: Optional[int]) -> int:
    if ncols is not None:
        for row in A:
            if len(row) != ncols:
                raise DimensionMismatch(ncols, len(row), "matrix row")
        return ncols
    if not A:
        raise ValueError("column count of an empty matrix must be given")
    width = len(A[0])
    for row in A:
        if len(row) != width:
            raise DimensionMismatch(width, len(row), "matrix row")
    return width


def _ext_gcd(a: int, b: int) -> Tuple[int, int, int]:
    """Return (g, x, y) with x*a + y*b = g = gcd(a, b) >= 0."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        return -old_r, -old_x, -old_y
    return old_r, old_x, old_y


# =============================================================================
# sympy adapters
# =============================================================================


def _to_zz(A: Sequence[Sequence[int]], ncols: int) -> DomainMatrix:
    rows = [[ZZ(int(x)) for x in row] for row in A]
    return DomainMatrix(rows, (len(rows), ncols), ZZ)


def _to_qq(A: Sequence[Sequence], ncols: int) -> DomainMatrix:
    rows = []
    for row in A:
        entries = []
        for x in row:
            f = Fraction(x)
            entries.append(QQ(f.numerator, f.denominator))
        rows.append(entries)
    return DomainMatrix(rows, (len(rows), ncols), QQ)


def _int_rows(M: DomainMatrix) -> IntMatrix:
    return [[int(x) for x in row] for row in M.to_list()]


def _fraction(x) -> Fraction:
    return Fraction(int(x.numerator), int(x.denominator))


def _row_reduce(A: Sequence[Sequence], ncols: int) -> Tuple[List[List[Fraction]], List[int]]:
    """Reduced row echelon form over Q with leftmost pivots."""
    M, pivots = _to_qq(A, ncols).rref()
    rows = [[_fraction(x) for x in row] for row in M.to_list()]
    return rows, list(pivots)


def rank(A: Sequence[Sequence], ncols: Optional[int] = None) -> int:
    """Rank over Q."""
    if not A:
        return 0
    return _to_qq(A, _ncols(A, ncols)).rank()


# =============================================================================
# Normal forms
# =============================================================================


def hermite_normal_form(
    A: Sequence[Sequence[int]], ncols: Optional[int] = None
) -> Tuple[IntMatrix, IntMatrix]:
    """Row-style Hermite normal form.

    Returns (H, U) with H = U A and U unimodular. H has positive pivots,
    entries above each pivot lie in [0, pivot), and zero rows come last.
    The transform is tracked alongside H row by row.

    Example:
        >>> hermite_normal_form([[2, 4], [1, 1]])[0]
        [[1, 1], [0, 2]]
    """
    n = _ncols(A, ncols)
    m = len(A)
    H = [[int(x) for x in row] for row in A]
    U = identity(m)
    r = 0
    for c in range(n):
        if r >= m:
            break
        for i in range(r + 1, m):
            b = H[i][c]
            if b == 0:
                continue
            a = H[r][c]
            g, x, y = _ext_gcd(a, b)
            pa, pb = a // g, b // g
            H[r], H[i] = (
                [x * p + y * q for p, q in zip(H[r], H[i])],
                [-pb * p + pa * q for p, q in zip(H[r], H[i])],
            )
            U[r], U[i] = (
                [x * p + y * q for p, q in zip(U[r], U[i])],
                [-pb * p + pa * q for p, q in zip(U[r], U[i])],
            )
        if H[r][c] == 0:
            continue
        if H[r][c] < 0:
            H[r] = [-x for x in H[r]]
            U[r] = [-x for x in U[r]]
        p = H[r][c]
        for i in range(r):
            q = H[i][c] // p
            if q:
                H[i] = [x - q * y for x, y in zip(H[i], H[r])]
                U[i] = [x - q * y for x, y in zip(U[i], U[r])]
        r += 1
    return H, U


def smith_normal_form(
    A: Sequence[Sequence[int]], ncols: Optional[int] = None
) -> Tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Smith normal form D = U A V with nonnegative d1 | d2 | ... on the diagonal.

    Example:
        >>> smith_normal_form([[2, 4], [6, 8]])[0]
        [[2, 0], [0, 4]]
    """
    n = _ncols(A, ncols)
    if not A:
        return [], [], identity(n)
    D, U, V = (_int_rows(M) for M in smith_normal_decomp(_to_zz(A, n)))
    for i in range(min(len(D), n)):
        if D[i][i] < 0:
            D[i] = [-x for x in D[i]]
            U[i] = [-x for x in U[i]]
    return D, U, V


def invariant_factors(A: Sequence[Sequence[int]], ncols: Optional[int] = None) -> List[int]:
    """Nonzero diagonal entries of the Smith normal form."""
    if not A:
        return []
    D, _, _ = smith_normal_form(A, ncols)
    return [D[i][i] for i in range(min(len(D), len(D[0]))) if D[i][i] != 0]


def kernel_lattice(A: Sequence[Sequence[int]], ncols: Optional[int] = None) -> List[LatticeVector]:
    """Basis of {x in Z^n : A x = 0}, canonicalized by Hermite normal form.

    With D = U A V the trailing columns of V past the rank span the kernel.

    Example:
        >>> kernel_lattice([[0, 1, 2], [1, 0, -1]])
        [(1, -2, 1)]
    """
    n = _ncols(A, ncols)
    if not A:
        return [tuple(row) for row in identity(n)]
    D, _, V = smith_normal_form(A, n)
    r = sum(1 for i in range(min(len(D), n)) if D[i][i] != 0)
    basis = [[V[i][j] for i in range(n)] for j in range(r, n)]
    return _hnf_rows(basis, n)


def _hnf_rows(vectors: Sequence[Sequence[int]], n: int) -> List[LatticeVector]:
    if not vectors:
        return []
    H, _ = hermite_normal_form(vectors, n)
    return [tuple(row) for row in H if any(row)]


def saturated_basis(vectors: Sequence[Sequence[int]], rank_: int) -> List[LatticeVector]:
    """HNF basis of span(vectors) intersected with Z^rank_."""
    vectors = [v for v in vectors if not is_zero(v)]
    if not vectors:
        return []
    return kernel_lattice(kernel_lattice(vectors, rank_), rank_)


def solve_rational(A: Sequence[Sequence], b: Sequence) -> Optional[RationalVector]:
    """Some rational solution of A x = b, or None if inconsistent.

    Pivot columns are taken leftmost and free variables are set to zero.

    Example:
        >>> solve_rational([[1, 1]], [1])
        (Fraction(1, 1), Fraction(0, 1))
    """
    if len(A) != len(b):
        raise DimensionMismatch(len(A), len(b), "right-hand side")
    if not A:
        return ()
    n = _ncols(A, None)
    augmented = [list(row) + [rhs] for row, rhs in zip(A, b)]
    M, pivots = _row_reduce(augmented, n + 1)
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for row, c in zip(M, pivots):
        x[c] = row[n]
    return tuple(x)


def inverse_unimodular(U: Sequence[Sequence[int]]) -> IntMatrix:
    """Inverse of a unimodular integer matrix."""
    n = len(U)
    if n == 0:
        return []
    try:
        inverse = _to_qq(U, _ncols(U, n)).inv()
    except DMNonInvertibleMatrixError:
        raise ValueError("matrix is not unimodular") from None
    rows = [[_fraction(x) for x in row] for row in inverse.to_list()]
    if any(x.denominator != 1 for row in rows for x in row):
        raise ValueError("matrix is not unimodular")
    return [[int(x) for x in row] for row in rows]


def project_to_complement(
    v: Sequence, basis: Sequence[Sequence[int]]
) -> RationalVector:
    """Orthogonal projection of v onto the complement of span(basis)."""
    v = tuple(Fraction(x) for x in v)
    if not basis:
        return v
    gram = [[dot(a, b) for b in basis] for a in basis]
    coeffs = solve_rational(gram, [dot(a, v) for a in basis])
    result = list(v)
    for c, a in zip(coeffs, basis):
        if c:
            result = [x - c * y for x, y in zip(result, a)]
    return tuple(result)


def parallelepiped_points(
    generators: Sequence[Sequence[int]], rank_: int
) -> List[Tuple[LatticeVector, RationalVector]]:
    """Lattice points of the half-open parallelepiped of independent generators.

    Returns (point, coefficients) pairs with point = sum(c_i * u_i) and every
    c_i in [0, 1), one pair per element of (Z^n ∩ span) / Z<u_i>, sorted by
    point. The origin is always included.
    """
    d = len(generators)
    if d == 0:
        return [(tuple([0] * rank_), ())]
    if rank(generators, rank_) != d:
        raise ValueError("parallelepiped generators must be linearly independent")
    A = transpose(generators)
    D, U, _ = smith_normal_form(A, d)
    factors = [D[i][i] for i in range(d)]
    Uinv = inverse_unimodular(U)
    steps = [tuple(Uinv[r][i] for r in range(rank_)) for i in range(d)]

    points = {}
    for ks in product(*(range(f) for f in factors)):
        x = tuple(sum(k * s[r] for k, s in zip(ks, steps)) for r in range(rank_))
        coeffs = solve_rational(A, x)
        fractional = tuple(c - floor(c) for c in coeffs)
        point = tuple(
            int(sum(c * u[r] for c, u in zip(fractional, generators))) for r in range(rank_)
        )
        points[point] = fractional
    return sorted(points.items())


def reduce_modulo(v: Sequence[int], hnf_rows: Sequence[Sequence[int]]) -> LatticeVector:
    """Canonical representative of v modulo the lattice spanned by HNF rows.

    After reduction each pivot entry lies in [0, pivot).
    """
    v = list(v)
    for row in hnf_rows:
        col = next(i for i, x in enumerate(row) if x != 0)
        q = v[col] // row[col]
        if q:
            v = [x - q * y for x, y in zip(v, row)]
    return tuple(v)

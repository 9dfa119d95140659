"""Exact integer linear algebra over lattices.

Vectors are tuples of Python ints (arbitrary precision), matrices are
tuples of row vectors.  Everything here is pure and deterministic:
normal-form pivots are chosen as the smallest absolute nonzero entry,
ties broken by lowest row then column index.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd

from .errors import DependentRows, ZeroVector

Vector = tuple[int, ...]
Matrix = tuple[Vector, ...]


def vec(entries) -> Vector:
    return tuple(int(e) for e in entries)


def mat(rows) -> Matrix:
    rows = tuple(vec(r) for r in rows)
    if rows and any(len(r) != len(rows[0]) for r in rows):
        raise ValueError("ragged matrix")
    return rows


def dot(u, v) -> int:
    return sum(a * b for a, b in zip(u, v, strict=True))


def vadd(u, v) -> Vector:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def vsub(u, v) -> Vector:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def vneg(u) -> Vector:
    return tuple(-a for a in u)


def vscale(c, u) -> Vector:
    return tuple(c * a for a in u)


def is_zero(u) -> bool:
    return all(a == 0 for a in u)


def gcd_vector(u) -> int:
    g = 0
    for a in u:
        g = gcd(g, a)
    return g


def primitive(v) -> Vector:
    """v divided by the (positive) gcd of its entries; rejects the zero vector."""
    v = vec(v)
    g = gcd_vector(v)
    if g == 0:
        raise ZeroVector("the zero vector has no primitive generator")
    return tuple(a // g for a in v)


def identity(n) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def transpose(rows) -> Matrix:
    return tuple(zip(*rows)) if rows else ()


def mat_mul(a, b) -> Matrix:
    bt = transpose(b)
    return tuple(tuple(dot(ra, cb) for cb in bt) for ra in a)


def mat_vec(a, x) -> Vector:
    return tuple(dot(r, x) for r in a)


def det(rows) -> int:
    """Exact determinant of a square integer matrix (fraction-free Bareiss)."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return 1
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def rank(rows) -> int:
    """Rank over the rationals."""
    m = [[Fraction(e) for e in r] for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    r = 0
    for j in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][j] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][j]
        for i in range(nrows):
            if i != r and m[i][j] != 0:
                c = m[i][j] / inv
                m[i] = [a - c * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == nrows:
            break
    return r


# ---------------------------------------------------------------------------
# Hermite normal form (row style)

def _hnf_inplace(h, u=None):
    """Reduce h to row HNF in place; mirror row operations on u when given."""
    nrows = len(h)
    ncols = len(h[0]) if h else 0

    def rowop(i, q, k):
        h[i] = [a - q * b for a, b in zip(h[i], h[k])]
        if u is not None:
            u[i] = [a - q * b for a, b in zip(u[i], u[k])]

    def swap(i, k):
        h[i], h[k] = h[k], h[i]
        if u is not None:
            u[i], u[k] = u[k], u[i]

    def negate(i):
        h[i] = [-a for a in h[i]]
        if u is not None:
            u[i] = [-a for a in u[i]]

    r = 0
    for j in range(ncols):
        while True:
            cands = [(abs(h[i][j]), i) for i in range(r, nrows) if h[i][j] != 0]
            if not cands:
                break
            _, piv = min(cands)
            if piv != r:
                swap(r, piv)
            done = True
            for i in range(r + 1, nrows):
                if h[i][j] != 0:
                    q = h[i][j] // h[r][j]
                    rowop(i, q, r)
                    if h[i][j] != 0:
                        done = False
            if done:
                break
        if r < nrows and h[r][j] != 0:
            if h[r][j] < 0:
                negate(r)
            for i in range(r):
                q = h[i][j] // h[r][j]
                if q:
                    rowop(i, q, r)
            r += 1
            if r == nrows:
                break
    return r


def hermite_normal_form(a) -> Matrix:
    """Row-style HNF: echelon, positive pivots, entries above a pivot in [0, pivot).

    Zero rows are preserved at the bottom, so the shape is unchanged and the
    integer row span is preserved.
    """
    a = mat(a)
    if not a:
        raise ValueError("empty matrix")
    h = [list(r) for r in a]
    _hnf_inplace(h)
    return tuple(tuple(r) for r in h)


def hnf_with_transform(a):
    """(H, U) with U·a = H, U unimodular, H the row HNF of a."""
    a = mat(a)
    if not a:
        raise ValueError("empty matrix")
    h = [list(r) for r in a]
    u = [list(r) for r in identity(len(a))]
    _hnf_inplace(h, u)
    return tuple(tuple(r) for r in h), tuple(tuple(r) for r in u)


def hnf_basis(rows) -> Matrix:
    """Canonical basis (nonzero HNF rows) of the lattice generated by rows."""
    rows = mat(rows)
    if not rows:
        return ()
    return tuple(r for r in hermite_normal_form(rows) if not is_zero(r))


# ---------------------------------------------------------------------------
# Smith normal form

@dataclass(frozen=True)
class SmithDecomposition:
    """U·A·V = D with U, V unimodular and D diagonal, d_1 | d_2 | ...

    invariant_factors holds the nonzero diagonal entries; zero_count records
    how many diagonal slots beyond them are zero.
    """
    U: Matrix
    D: Matrix
    V: Matrix
    invariant_factors: tuple[int, ...]
    zero_count: int


def smith_normal_form(a) -> SmithDecomposition:
    a = mat(a)
    if not a:
        raise ValueError("empty matrix")
    m = len(a)
    n = len(a[0])
    d = [list(r) for r in a]
    u = [list(r) for r in identity(m)]
    v = [list(r) for r in identity(n)]

    def row_op(i, q, k):
        d[i] = [x - q * y for x, y in zip(d[i], d[k])]
        u[i] = [x - q * y for x, y in zip(u[i], u[k])]

    def col_op(j, q, k):
        for row in d:
            row[j] -= q * row[k]
        for row in v:
            row[j] -= q * row[k]

    def row_swap(i, k):
        d[i], d[k] = d[k], d[i]
        u[i], u[k] = u[k], u[i]

    def col_swap(j, k):
        for row in d:
            row[j], row[k] = row[k], row[j]
        for row in v:
            row[j], row[k] = row[k], row[j]

    for k in range(min(m, n)):
        while True:
            cands = [(abs(d[i][j]), i, j)
                     for i in range(k, m) for j in range(k, n) if d[i][j] != 0]
            if not cands:
                break
            _, pi, pj = min(cands)
            if pi != k:
                row_swap(k, pi)
            if pj != k:
                col_swap(k, pj)
            # clear the pivot column, then the pivot row
            dirty = False
            for i in range(k + 1, m):
                if d[i][k] != 0:
                    q = d[i][k] // d[k][k]
                    row_op(i, q, k)
                    if d[i][k] != 0:
                        dirty = True
            for j in range(k + 1, n):
                if d[k][j] != 0:
                    q = d[k][j] // d[k][k]
                    col_op(j, q, k)
                    if d[k][j] != 0:
                        dirty = True
            if dirty:
                continue
            # pivot must divide the whole remaining block for d_1 | d_2 | ...
            bad = next(((i, j) for i in range(k + 1, m) for j in range(k + 1, n)
                        if d[i][j] % d[k][k] != 0), None)
            if bad is None:
                break
            row_op(k, -1, bad[0])
        if k < m and k < n and d[k][k] < 0:
            d[k] = [-x for x in d[k]]
            u[k] = [-x for x in u[k]]

    diag = [d[i][i] for i in range(min(m, n))]
    factors = tuple(x for x in diag if x != 0)
    return SmithDecomposition(
        U=tuple(tuple(r) for r in u),
        D=tuple(tuple(r) for r in d),
        V=tuple(tuple(r) for r in v),
        invariant_factors=factors,
        zero_count=len(diag) - len(factors),
    )


# ---------------------------------------------------------------------------
# Lattices as row spans

def kernel_lattice(rows, ncols=None) -> Matrix:
    """Canonical basis of {x in Z^n : <r, x> = 0 for every row r}.

    The result is saturated (it is the full integer kernel, not a finite-index
    sublattice).
    """
    rows = mat(rows)
    if not rows:
        if ncols is None:
            raise ValueError("ncols required for an empty row set")
        return identity(ncols)
    n = len(rows[0])
    h, u = hnf_with_transform(transpose(rows))
    ker = [u[i] for i in range(n) if is_zero(h[i])]
    if not ker:
        return ()
    return hnf_basis(ker)


def solve_integer(rows, target):
    """Coefficients c with sum(c_i * rows_i) = target, or None."""
    rows = mat(rows)
    target = vec(target)
    if not rows:
        return () if is_zero(target) else None
    h, u = hnf_with_transform(rows)
    residual = list(target)
    y = [0] * len(h)
    for i, row in enumerate(h):
        if is_zero(row):
            continue
        j = next(jj for jj, x in enumerate(row) if x != 0)
        if residual[j] % row[j] != 0:
            return None
        c = residual[j] // row[j]
        y[i] = c
        if c:
            residual = [a - c * b for a, b in zip(residual, row)]
    if any(residual):
        return None
    return tuple(dot(y, col) for col in zip(*u))


def lattice_contains(basis, v) -> bool:
    return solve_integer(basis, v) is not None if basis else is_zero(vec(v))


def saturate_lattice(rows, ncols=None) -> Matrix:
    """Canonical basis of (Q-span of rows) ∩ Z^n."""
    rows = mat(rows)
    if not rows and ncols is None:
        raise ValueError("ncols required for an empty row set")
    n = ncols if ncols is not None else len(rows[0])
    nonzero = tuple(r for r in rows if not is_zero(r))
    if not nonzero:
        return ()
    perp = kernel_lattice(nonzero, n)
    if not perp:
        return identity(n)
    return kernel_lattice(perp, n)


def lattice_index(b) -> int:
    """Index of the row span of b inside its rational saturation.

    Equals the gcd of the absolute values of all maximal minors; |det b| for
    square b.  Rows must be linearly independent.
    """
    b = mat(b)
    if not b:
        raise ValueError("empty matrix")
    r = len(b)
    n = len(b[0])
    if rank(b) < r:
        raise DependentRows("rows are linearly dependent over the rationals")
    g = 0
    for cols in combinations(range(n), r):
        sub = tuple(tuple(row[j] for j in cols) for row in b)
        g = gcd(g, abs(det(sub)))
        if g == 1:
            return 1
    return g


# ---------------------------------------------------------------------------
# Rational solving and projections

def solve_rational(rows, target):
    """Fractions c with sum(c_i * rows_i) = target, or None (rows as a basis)."""
    rows = mat(rows)
    target = vec(target)
    if not rows:
        return () if is_zero(target) else None
    m = [[Fraction(e) for e in r] for r in transpose(rows)]
    b = [Fraction(e) for e in target]
    nrows = len(m)  # ambient dim
    ncols = len(rows)
    pivots = {}
    r = 0
    for j in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][j] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        b[r], b[piv] = b[piv], b[r]
        inv = m[r][j]
        for i in range(nrows):
            if i != r and m[i][j] != 0:
                c = m[i][j] / inv
                m[i] = [x - c * y for x, y in zip(m[i], m[r])]
                b[i] -= c * b[r]
        pivots[j] = r
        r += 1
    sol = [Fraction(0)] * ncols
    for j, i in pivots.items():
        sol[j] = b[i] / m[i][j]
    for i in range(nrows):
        if all(m[i][j] == 0 for j in range(ncols)) and b[i] != 0:
            return None
    # verify (guards rank-deficient systems)
    for i, row in enumerate(transpose(rows)):
        if sum(Fraction(x) * s for x, s in zip(row, sol)) != target[i]:
            return None
    return tuple(sol)


def in_span(rows, v) -> bool:
    return solve_rational(rows, v) is not None if rows else is_zero(vec(v))


def project_off(v, basis) -> Vector:
    """Primitive integer vector on the ray of v minus its orthogonal projection
    onto the span of basis; v must not lie in that span."""
    if not basis:
        return primitive(v)
    # Gram system: find x with G x = B v, subtract x·B from v
    g = [[Fraction(dot(bi, bj)) for bj in basis] for bi in basis]
    rhs = [Fraction(dot(bi, v)) for bi in basis]
    coeffs = _solve_square(g, rhs)
    proj = [Fraction(x) for x in v]
    for c, b in zip(coeffs, basis):
        proj = [p - c * e for p, e in zip(proj, b)]
    denom = 1
    for p in proj:
        denom = denom * p.denominator // gcd(denom, p.denominator)
    ints = [int(p * denom) for p in proj]
    return primitive(ints)


def _solve_square(m, b):
    """Solve a square full-rank Fraction system in place."""
    n = len(m)
    m = [row[:] for row in m]
    b = b[:]
    for k in range(n):
        piv = next(i for i in range(k, n) if m[i][k] != 0)
        m[k], m[piv] = m[piv], m[k]
        b[k], b[piv] = b[piv], b[k]
        inv = m[k][k]
        for i in range(n):
            if i != k and m[i][k] != 0:
                c = m[i][k] / inv
                m[i] = [x - c * y for x, y in zip(m[i], m[k])]
                b[i] -= c * b[k]
    return [b[k] / m[k][k] for k in range(n)]

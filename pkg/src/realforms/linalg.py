"""Exact linear algebra over the rationals.

Matrices are lists of rows of :class:`fractions.Fraction` (ints are accepted
anywhere a Fraction is). Everything here is small dense linear algebra; sizes
never exceed a couple of dozen rows.
"""
from fractions import Fraction
from math import lcm

from .errors import SingularMatrixError


def _integer_rows(rows):
    """Scale each row to integers; return the rows and the product of the scale factors."""
    out = []
    scale = 1
    for row in rows:
        den = 1
        for v in row:
            den = lcm(den, v.denominator)
        out.append([v.numerator * (den // v.denominator) for v in row])
        scale *= den
    return out, scale


def det(matrix):
    """Determinant via fraction-free Bareiss elimination."""
    n = len(matrix)
    if n == 0:
        return Fraction(1)
    if any(len(row) != n for row in matrix):
        raise ValueError("determinant of a non-square matrix")
    a, scale = _integer_rows(matrix)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = akk
    return Fraction(sign * a[n - 1][n - 1], scale)


def rref(matrix):
    """Reduced row echelon form. Returns ``(rows, pivot_columns)``."""
    a = [[Fraction(v) for v in row] for row in matrix]
    if not a:
        return a, []
    m, n = len(a), len(a[0])
    pivots = []
    r = 0
    for c in range(n):
        if r == m:
            break
        p = next((i for i in range(r, m) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        pv = a[r][c]
        a[r] = [v / pv for v in a[r]]
        for i in range(m):
            if i != r and a[i][c] != 0:
                factor = a[i][c]
                a[i] = [vi - factor * vr for vi, vr in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a, pivots


def rank(matrix):
    return len(rref(matrix)[1])


def nullspace(matrix, ncols=None):
    """Basis of the right kernel, one vector per free column.

    ``ncols`` is needed only when ``matrix`` has no rows.
    """
    if not matrix:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    reduced, pivots = rref(matrix)
    n = len(matrix[0])
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * n
        v[fc] = Fraction(1)
        for row, pc in zip(reduced, pivots):
            v[pc] = -row[fc]
        basis.append(v)
    return basis


def solve(matrix, rhs):
    """Solve ``matrix @ x = rhs`` exactly for a consistent system with full column rank.

    Overdetermined systems are fine as long as they are consistent.
    """
    n = len(matrix[0])
    aug = [list(row) + [b] for row, b in zip(matrix, rhs)]
    reduced, pivots = rref(aug)
    if n in pivots:
        raise SingularMatrixError("inconsistent linear system")
    if len(pivots) < n:
        raise SingularMatrixError("linear system does not determine a unique solution")
    x = [Fraction(0)] * n
    for row, pc in zip(reduced, pivots):
        x[pc] = row[n]
    return x

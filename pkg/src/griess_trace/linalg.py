"""Exact linear algebra over fields of Fractions or rational functions.

solve_linear works for any scalar type with field operations, and allows the
right-hand side entries to live in a module over that field (anything with
+, -, and scalar multiplication), which is how Gram-matrix systems with
invariant-valued right-hand sides are solved.  bareiss_det is the
fraction-free determinant used on polynomial matrices.
"""

from __future__ import annotations

from fractions import Fraction

from .poly import Polynomial, poly_divexact


class InconsistentSystem(ValueError):
    pass


class UnderdeterminedSystem(ValueError):
    pass


def solve_linear(rows, rhs, is_zero=None):
    """Solve rows * x = rhs exactly.

    rows: list of lists of field scalars (m x n, m >= n expected);
    rhs: list of module elements (length m).
    Requires full column rank and a consistent system; raises otherwise.
    """
    if is_zero is None:
        is_zero = lambda v: not v
    m = len(rows)
    n = len(rows[0]) if rows else 0
    a = [list(r) for r in rows]
    b = list(rhs)
    piv_rows = []
    for col in range(n):
        piv = None
        for r in range(len(piv_rows), m):
            if not is_zero(a[r][col]):
                piv = r
                break
        if piv is None:
            raise UnderdeterminedSystem(f"no pivot in column {col}")
        r0 = len(piv_rows)
        a[r0], a[piv] = a[piv], a[r0]
        b[r0], b[piv] = b[piv], b[r0]
        inv = 1 / a[r0][col] if not isinstance(a[r0][col], Fraction) \
            else Fraction(1) / a[r0][col]
        a[r0] = [x * inv for x in a[r0]]
        b[r0] = b[r0] * inv
        for r in range(m):
            if r != r0 and not is_zero(a[r][col]):
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[r0])]
                b[r] = b[r] - b[r0] * f
        piv_rows.append(col)
    for r in range(n, m):
        if not is_zero(b[r]):
            raise InconsistentSystem(f"inconsistent row {r}")
    return b[:n]


def nullspace(rows):
    """Basis of the rational nullspace of an m x n Fraction matrix."""
    m = len(rows)
    n = len(rows[0]) if rows else 0
    a = [[Fraction(x) for x in r] for r in rows]
    pivots = []
    r0 = 0
    for col in range(n):
        piv = next((r for r in range(r0, m) if a[r][col]), None)
        if piv is None:
            continue
        a[r0], a[piv] = a[piv], a[r0]
        inv = Fraction(1) / a[r0][col]
        a[r0] = [x * inv for x in a[r0]]
        for r in range(m):
            if r != r0 and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[r0])]
        pivots.append(col)
        r0 += 1
        if r0 == m:
            break
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * n
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -a[r][fc]
        basis.append(v)
    return basis


def solve_affine(rows, rhs):
    """General solve over Fractions: returns (particular, nullspace basis).

    Raises InconsistentSystem when no solution exists.
    """
    m = len(rows)
    n = len(rows[0]) if rows else 0
    a = [[Fraction(x) for x in r] + [Fraction(rhs[i])] for i, r in enumerate(rows)]
    pivots = []
    r0 = 0
    for col in range(n):
        piv = next((r for r in range(r0, m) if a[r][col]), None)
        if piv is None:
            continue
        a[r0], a[piv] = a[piv], a[r0]
        inv = Fraction(1) / a[r0][col]
        a[r0] = [x * inv for x in a[r0]]
        for r in range(m):
            if r != r0 and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[r0])]
        pivots.append(col)
        r0 += 1
        if r0 == m:
            break
    for r in range(r0, m):
        if a[r][n]:
            raise InconsistentSystem("no solution")
    part = [Fraction(0)] * n
    for r, pc in enumerate(pivots):
        part[pc] = a[r][n]
    basis = []
    for fc in (c for c in range(n) if c not in pivots):
        v = [Fraction(0)] * n
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -a[r][fc]
        basis.append(v)
    return part, basis


def bareiss_det(matrix):
    """Fraction-free determinant of a square matrix of Polynomials."""
    n = len(matrix)
    if n == 0:
        return Polynomial.constant(1, ())
    a = [[x for x in row] for row in matrix]
    vars = a[0][0].vars
    sign = 1
    prev = Polynomial.constant(1, vars)
    for k in range(n - 1):
        if a[k][k].is_zero():
            piv = next((r for r in range(k + 1, n) if not a[r][k].is_zero()), None)
            if piv is None:
                return Polynomial.constant(0, vars)
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                a[i][j] = poly_divexact(num, prev)
            a[i][k] = Polynomial.constant(0, vars)
        prev = a[k][k]
    det = a[n - 1][n - 1]
    return det if sign == 1 else -det

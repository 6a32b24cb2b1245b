"""Exact dense linear algebra over the rationals for the resolution oracle.

Matrices are lists of row lists with Fraction entries (inputs are 0/1
incidence matrices, so most arithmetic stays integral).  Instances are tiny;
no sparse machinery.
"""

from __future__ import annotations

from fractions import Fraction

Matrix = list[list[Fraction]]


def zeros(nrows: int, ncols: int) -> Matrix:
    return [[Fraction(0)] * ncols for _ in range(nrows)]


def identity(n: int) -> Matrix:
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = Fraction(1)
    return m


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if not a or not b:
        return []
    ncols = len(b[0])
    out = zeros(len(a), ncols)
    for i, row in enumerate(a):
        for k, x in enumerate(row):
            if x:
                brow = b[k]
                orow = out[i]
                for j in range(ncols):
                    if brow[j]:
                        orow[j] += x * brow[j]
    return out


def row_times(mat: Matrix, vec: list[Fraction], ncols: int) -> list[Fraction]:
    """vec @ mat for a row vector; ncols fixes the width when mat has no rows."""
    out = [Fraction(0)] * ncols
    for k, x in enumerate(vec):
        if x:
            row = mat[k]
            for j, y in enumerate(row):
                if y:
                    out[j] += x * y
    return out


def rref(mat: Matrix, pivot: str = "first") -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns.

    pivot picks the pivot row among candidates: "first" takes the first
    nonzero, "largest" the entry of largest absolute value (elimination
    results must agree; tested).
    """
    m = [row[:] for row in mat]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        cand = [i for i in range(r, nrows) if m[i][c] != 0]
        if not cand:
            continue
        i = cand[0] if pivot == "first" else max(cand, key=lambda i: abs(m[i][c]))
        m[r], m[i] = m[i], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for j in range(nrows):
            if j != r and m[j][c]:
                f = m[j][c]
                m[j] = [x - f * y for x, y in zip(m[j], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivots


def rank(mat: Matrix, pivot: str = "first") -> int:
    if not mat or not mat[0]:
        return 0
    return len(rref(mat, pivot)[1])


def left_nullspace(mat: Matrix, nrows: int, pivot: str = "first") -> tuple[Matrix, list[int]]:
    """Basis of {x row vector : x @ mat = 0} plus its free coordinate list.

    Each basis vector has a 1 in its own free coordinate and zeros in the
    others, so coordinates of a kernel vector in this basis are read off at
    the free coordinates.
    """
    if nrows == 0:
        return [], []
    ncols = len(mat[0]) if mat else 0
    if ncols == 0:
        return identity(nrows), list(range(nrows))
    # x @ mat = 0  <=>  mat^T x^T = 0: reduce mat^T.
    tr = [[mat[i][j] for i in range(nrows)] for j in range(ncols)]
    red, pivots = rref(tr, pivot)
    pivot_set = set(pivots)
    free = [j for j in range(nrows) if j not in pivot_set]
    basis: Matrix = []
    for f in free:
        vec = [Fraction(0)] * nrows
        vec[f] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -red[r][f]
        basis.append(vec)
    return basis, free


def coords_in_nullbasis(free_cols: list[int], vec: list[Fraction]) -> list[Fraction]:
    """Coordinates of a kernel vector in a left_nullspace basis."""
    return [vec[f] for f in free_cols]

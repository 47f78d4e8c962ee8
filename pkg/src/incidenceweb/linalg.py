"""Rank computations: float rank with a pivot tolerance, exact row reduction.

The float side wraps scipy's column-pivoted QR; the exact side is a small
field row-reducer over Gaussian rationals (or any scalar with exact
arithmetic and a truthiness zero test).
"""

from __future__ import annotations

import numpy as np
import scipy.linalg

from .scalars import GaussianRational

DEFAULT_RANK_TOL = 1e-9


def numeric_rank(mat, tol=DEFAULT_RANK_TOL):
    """Rank of a float matrix: pivots of a column-pivoted QR above tol * max pivot."""
    a = np.asarray(mat, dtype=complex)
    if a.size == 0:
        return 0
    r = scipy.linalg.qr(a, mode="r", pivoting=True)[0]
    piv = np.abs(np.diag(r))
    if piv.size == 0 or piv[0] == 0.0:
        return 0
    return int(np.count_nonzero(piv > tol * piv[0]))


def qr_pivot_magnitudes(mat):
    """Sorted |R_ii| of the column-pivoted QR, for rank-gap diagnostics."""
    a = np.asarray(mat, dtype=complex)
    if a.size == 0:
        return np.zeros(0)
    r = scipy.linalg.qr(a, mode="r", pivoting=True)[0]
    return np.abs(np.diag(r))


def nullity(mat, tol=DEFAULT_RANK_TOL):
    a = np.asarray(mat, dtype=complex)
    if a.size == 0:
        return a.shape[1] if a.ndim == 2 else 0
    return a.shape[1] - numeric_rank(a, tol)


def exact_row_reduce(rows):
    """Exact rank and kernel basis of a matrix of exact scalars.

    Returns ``(rank, kernel)`` where kernel is a list of exact coefficient
    vectors spanning the right null space.  No tolerances are involved;
    entries may be ints or GaussianRationals.
    """
    mat = [[_as_gr(v) for v in row] for row in rows]
    nrows = len(mat)
    ncols = len(mat[0]) if nrows else 0
    if ncols == 0:
        return 0, []

    pivot_cols = []
    rank = 0
    for col in range(ncols):
        pivot_row = None
        for i in range(rank, nrows):
            if mat[i][col]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        mat[rank], mat[pivot_row] = mat[pivot_row], mat[rank]
        pv = mat[rank][col]
        mat[rank] = [v / pv for v in mat[rank]]
        for i in range(nrows):
            if i != rank and mat[i][col]:
                f = mat[i][col]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[rank])]
        pivot_cols.append(col)
        rank += 1
        if rank == nrows:
            break

    free_cols = [c for c in range(ncols) if c not in pivot_cols]
    kernel = []
    zero = GaussianRational(0)
    one = GaussianRational(1)
    for fc in free_cols:
        vec = [zero] * ncols
        vec[fc] = one
        for i, pc in enumerate(pivot_cols):
            vec[pc] = -mat[i][fc]
        kernel.append(vec)
    return rank, kernel


def exact_rank(rows):
    return exact_row_reduce(rows)[0]


def exact_solve(rows, rhs):
    """Solve an exactly-determined consistent linear system; None if inconsistent."""
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    ncols = len(rows[0])
    rank_a = exact_rank(rows)
    rank_aug, kernel = exact_row_reduce(aug)
    if rank_aug != rank_a:
        return None
    # solutions of the augmented kernel with last coordinate -1, scaled
    for vec in kernel:
        if vec[ncols]:
            scale = -vec[ncols]
            return [v / scale for v in vec[:ncols]]
    return None


def _as_gr(v):
    if isinstance(v, GaussianRational):
        return v
    return GaussianRational(v)

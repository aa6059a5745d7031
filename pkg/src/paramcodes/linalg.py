"""Row reduction over GF(q) on encoded integer matrices."""
from __future__ import annotations

import numpy as np

from .gfq import FiniteField


def row_reduce(matrix, field: FiniteField) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns.

    Pivots are chosen as the first row (from the current one down) with a
    nonzero entry in the column, so the result is deterministic.  Zero rows
    are dropped: the returned matrix is a basis of the row space.
    """
    a = np.array(matrix, dtype=np.int64, copy=True)
    if a.ndim != 2:
        raise ValueError("expected a 2-d matrix")
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        p = r + nz[0]
        if p != r:
            a[[r, p]] = a[[p, r]]
        a[r] = field.mul(a[r], field.inv(int(a[r, c])))
        factors = a[:, c].copy()
        factors[r] = 0
        hit = np.flatnonzero(factors)
        if hit.size:
            a[hit] = field.sub(a[hit], field.mul(factors[hit, None], a[r][None, :]))
        pivots.append(c)
        r += 1
    return a[:r], pivots


def rank(matrix, field: FiniteField) -> int:
    m = np.asarray(matrix)
    if m.size == 0:
        return 0
    # eliminating along the shorter side is cheaper; rank is transpose-invariant
    if m.shape[0] > m.shape[1]:
        m = m.T
    return len(row_reduce(m, field)[1])


def matmul(a, b, field: FiniteField) -> np.ndarray:
    """Product of encoded matrices over the field."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for i in range(a.shape[1]):
        out = field.add(out, field.mul(a[:, i, None], b[i][None, :]))
    return out

"""Pure-Python/numpy fallback for the hot enumeration kernels.

Same API as the compiled module ``_ckernels``; selected at import time by
``cliffordlab.kernels`` when the extension is unavailable.
"""

from __future__ import annotations

import numpy as np


def rank_mod(mat, d: int) -> int:
    """Rank of an integer matrix over Z_d by Gaussian elimination."""
    m = [[int(x) % d for x in row] for row in np.asarray(mat)]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    rank = 0
    for c in range(ncols):
        pr = next((i for i in range(rank, nrows) if m[i][c]), None)
        if pr is None:
            continue
        m[rank], m[pr] = m[pr], m[rank]
        inv = pow(m[rank][c], -1, d)
        prow = [(v * inv) % d for v in m[rank]]
        m[rank] = prow
        for i in range(rank + 1, nrows):
            f = m[i][c]
            if f:
                m[i] = [(a - f * b) % d for a, b in zip(m[i], prow)]
        rank += 1
        if rank == nrows:
            break
    return rank


def batch_consistency(A, b, d: int):
    """For each of N stacked linear systems decide rank(A) == rank([A|b]).

    A is (N, rows, cols), b is (N, rows); returns a boolean mask of length N.
    """
    A = np.asarray(A)
    b = np.asarray(b)
    n = A.shape[0]
    out = np.empty(n, dtype=bool)
    for k in range(n):
        aug = np.concatenate([A[k], b[k][:, None]], axis=1)
        out[k] = _consistent_single(aug, d)
    return out


def _consistent_single(aug, d: int) -> bool:
    """Consistency of one augmented system: no pivot in the last column."""
    m = [[int(x) % d for x in row] for row in aug]
    nrows = len(m)
    ncols = len(m[0])
    rank = 0
    for c in range(ncols):
        pr = next((i for i in range(rank, nrows) if m[i][c]), None)
        if pr is None:
            continue
        if c == ncols - 1:
            return False
        m[rank], m[pr] = m[pr], m[rank]
        inv = pow(m[rank][c], -1, d)
        prow = [(v * inv) % d for v in m[rank]]
        m[rank] = prow
        for i in range(rank + 1, nrows):
            f = m[i][c]
            if f:
                m[i] = [(a - f * b) % d for a, b in zip(m[i], prow)]
        rank += 1
        if rank == nrows:
            break
    return True

# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels: batched Z_d rank/consistency tests.

Mirrors the API of ``_pykernels``; the enumeration and E/F sampling paths
spend nearly all their time in ``batch_consistency``.
"""

import numpy as np
cimport numpy as cnp
cimport cython

cnp.import_array()


cdef inline long _mod_inv(long a, long d) nogil:
    # extended Euclid; a is nonzero mod d, d prime
    cdef long t = 0, newt = 1
    cdef long r = d, newr = a % d
    cdef long q, tmp
    while newr != 0:
        q = r / newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += d
    return t


@cython.boundscheck(False)
cdef bint _consistent_one(long* m, int nrows, int ncols, long d) nogil:
    # m is a row-major nrows x ncols scratch augmented matrix, entries in [0, d)
    cdef int rank = 0, c, i, j, pr
    cdef long inv, f, v
    for c in range(ncols):
        pr = -1
        for i in range(rank, nrows):
            if m[i * ncols + c] != 0:
                pr = i
                break
        if pr == -1:
            continue
        if c == ncols - 1:
            return False
        if pr != rank:
            for j in range(ncols):
                v = m[rank * ncols + j]
                m[rank * ncols + j] = m[pr * ncols + j]
                m[pr * ncols + j] = v
        inv = _mod_inv(m[rank * ncols + c], d)
        for j in range(c, ncols):
            m[rank * ncols + j] = (m[rank * ncols + j] * inv) % d
        for i in range(rank + 1, nrows):
            f = m[i * ncols + c]
            if f != 0:
                for j in range(c, ncols):
                    m[i * ncols + j] = (m[i * ncols + j] - f * m[rank * ncols + j]) % d
                    if m[i * ncols + j] < 0:
                        m[i * ncols + j] += d
        rank += 1
        if rank == nrows:
            break
    return True


def batch_consistency(A, b, long d):
    """For each of N stacked systems decide rank(A) == rank([A|b])."""
    cdef cnp.ndarray[cnp.int64_t, ndim=3] Aa = np.ascontiguousarray(A, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=2] ba = np.ascontiguousarray(b, dtype=np.int64)
    cdef Py_ssize_t n = Aa.shape[0]
    cdef int nrows = <int> Aa.shape[1]
    cdef int acols = <int> Aa.shape[2]
    cdef int ncols = acols + 1
    cdef cnp.ndarray[cnp.uint8_t, ndim=1] out = np.empty(n, dtype=np.uint8)
    cdef long scratch[96]
    cdef Py_ssize_t k
    cdef int i, j
    cdef long v
    if nrows * ncols > 96:
        raise ValueError("system too large for the compiled kernel")
    with nogil:
        for k in range(n):
            for i in range(nrows):
                for j in range(acols):
                    v = Aa[k, i, j] % d
                    if v < 0:
                        v += d
                    scratch[i * ncols + j] = v
                v = ba[k, i] % d
                if v < 0:
                    v += d
                scratch[i * ncols + acols] = v
            out[k] = _consistent_one(scratch, nrows, ncols, d)
    return out.astype(bool)


def rank_mod(mat, long d):
    """Rank of an integer matrix over Z_d."""
    cdef cnp.ndarray[cnp.int64_t, ndim=2] m = np.array(mat, dtype=np.int64) % d
    cdef int nrows = <int> m.shape[0]
    cdef int ncols = <int> m.shape[1]
    cdef int rank = 0, c, i, j, pr
    cdef long inv, f, v
    for c in range(ncols):
        pr = -1
        for i in range(rank, nrows):
            if m[i, c] != 0:
                pr = i
                break
        if pr == -1:
            continue
        if pr != rank:
            for j in range(ncols):
                v = m[rank, j]
                m[rank, j] = m[pr, j]
                m[pr, j] = v
        inv = _mod_inv(m[rank, c], d)
        for j in range(c, ncols):
            m[rank, j] = (m[rank, j] * inv) % d
        for i in range(rank + 1, nrows):
            f = m[i, c]
            if f != 0:
                for j in range(c, ncols):
                    m[i, j] = (m[i, j] - f * m[rank, j]) % d
                    if m[i, j] < 0:
                        m[i, j] += d
        rank += 1
        if rank == nrows:
            break
    return rank

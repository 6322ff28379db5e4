# cython: boundscheck=False, wraparound=False, cdivision=True
"""Gaussian elimination over F_p for primes below 2**63, in machine words.

Products are formed in 128-bit integers, so every entry stays a reduced
residue in [0, p).
"""

import numpy as np

cimport numpy as cnp
from libc.stdlib cimport free, malloc

ctypedef unsigned long long u64

cdef extern from *:
    """
    static inline unsigned long long hg_mulmod(unsigned long long a,
                                               unsigned long long b,
                                               unsigned long long p) {
        return (unsigned long long)(((unsigned __int128)a * b) % p);
    }
    """
    u64 hg_mulmod(u64 a, u64 b, u64 p) nogil


cdef inline u64 powmod(u64 a, u64 e, u64 p) noexcept nogil:
    cdef u64 r = 1
    while e:
        if e & 1:
            r = hg_mulmod(r, a, p)
        a = hg_mulmod(a, a, p)
        e >>= 1
    return r


cdef inline u64 submod(u64 a, u64 b, u64 p) noexcept nogil:
    return a - b if a >= b else a + (p - b)


cdef Py_ssize_t _eliminate(u64[:, ::1] a, u64 p, bint reduce_above, Py_ssize_t[::1] pivots) noexcept nogil:
    cdef Py_ssize_t nrows = a.shape[0], ncols = a.shape[1]
    cdef Py_ssize_t r = 0, c, i, j, k, piv, nnz
    cdef u64 inv, f, tmp
    cdef Py_ssize_t *nz
    if nrows == 0 or ncols == 0:
        return 0
    nz = <Py_ssize_t *> malloc(ncols * sizeof(Py_ssize_t))
    for c in range(ncols):
        if r == nrows:
            break
        piv = -1
        for i in range(r, nrows):
            if a[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(c, ncols):
                tmp = a[r, j]
                a[r, j] = a[piv, j]
                a[piv, j] = tmp
        inv = powmod(a[r, c], p - 2, p)
        nnz = 0
        for j in range(c, ncols):
            if a[r, j] != 0:
                a[r, j] = hg_mulmod(a[r, j], inv, p)
                nz[nnz] = j
                nnz += 1
        for i in range(r + 1 if not reduce_above else 0, nrows):
            if i == r:
                continue
            f = a[i, c]
            if f == 0:
                continue
            for k in range(nnz):
                j = nz[k]
                a[i, j] = submod(a[i, j], hg_mulmod(f, a[r, j], p), p)
        pivots[r] = c
        r += 1
    free(nz)
    return r



def rank(cnp.ndarray[cnp.uint64_t, ndim=2, mode="c"] a, u64 p):
    """Rank of ``a`` over F_p; ``a`` is overwritten."""
    cdef Py_ssize_t[::1] pivots = np.empty(max(1, min(a.shape[0], a.shape[1])), dtype=np.intp)
    return _eliminate(a, p, False, pivots)


def rref(cnp.ndarray[cnp.uint64_t, ndim=2, mode="c"] a, u64 p):
    """Reduce ``a`` in place to reduced row echelon form; return pivot columns."""
    cdef Py_ssize_t[::1] pivots = np.empty(max(1, min(a.shape[0], a.shape[1])), dtype=np.intp)
    cdef Py_ssize_t r = _eliminate(a, p, True, pivots)
    return [int(pivots[k]) for k in range(r)]

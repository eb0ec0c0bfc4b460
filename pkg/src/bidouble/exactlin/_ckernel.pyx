# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled batched matrix product on int64 with overflow detection."""

import numpy as np
from libc.stdint cimport int64_t

cdef extern from *:
    """
    static int bd_mul_add(long long a, long long b, long long *acc) {
        long long p;
        if (__builtin_mul_overflow(a, b, &p)) return 1;
        if (__builtin_add_overflow(*acc, p, acc)) return 1;
        return 0;
    }
    """
    int bd_mul_add(long long a, long long b, long long *acc) nogil


def batched_matmul_i64(const int64_t[:, :, ::1] a, const int64_t[:, :, ::1] b):
    """Return ``c[n] = a[n] @ b[n]``; raise OverflowError if int64 overflows."""
    cdef Py_ssize_t B = a.shape[0], M = a.shape[1], K = a.shape[2], N = b.shape[2]
    cdef Py_ssize_t n, i, k, j
    cdef long long x
    cdef int bad = 0
    out = np.zeros((B, M, N), dtype=np.int64)
    cdef int64_t[:, :, ::1] c = out
    with nogil:
        for n in range(B):
            for i in range(M):
                for k in range(K):
                    x = a[n, i, k]
                    if x == 0:
                        continue
                    for j in range(N):
                        if b[n, k, j] != 0:
                            if bd_mul_add(x, b[n, k, j], <long long *> &c[n, i, j]):
                                bad = 1
                                break
                    if bad:
                        break
                if bad:
                    break
            if bad:
                break
    if bad:
        raise OverflowError("int64 overflow in batched_matmul")
    return out

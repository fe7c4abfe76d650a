# cython: boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled kernel: polynomial-matrix products with zero-entry skipping."""

import numpy as np


def polymat_matmul(const long long[:, :, ::1] a, const long long[:, :, ::1] b):
    """Same contract as the fallback: (Da,N,N) x (Db,N,N) -> (Da+Db-1,N,N)
    with out[d] = sum over i+j=d of a[i] @ b[j], all int64."""
    cdef Py_ssize_t da = a.shape[0]
    cdef Py_ssize_t db = b.shape[0]
    cdef Py_ssize_t n = a.shape[1]
    if b.shape[1] != n or b.shape[2] != n or a.shape[2] != n:
        raise ValueError("shape mismatch")
    out_arr = np.zeros((da + db - 1, n, n), dtype=np.int64)
    cdef long long[:, :, ::1] out = out_arr
    cdef Py_ssize_t i, j, x, k, z
    cdef long long av
    with nogil:
        for i in range(da):
            for x in range(n):
                for k in range(n):
                    av = a[i, x, k]
                    if av == 0:
                        continue
                    for j in range(db):
                        for z in range(n):
                            out[i + j, x, z] += av * b[j, k, z]
    return out_arr

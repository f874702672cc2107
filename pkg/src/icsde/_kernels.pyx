# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loop: minimum shifted distance against better-ranked peers.

For each member i (rows ordered by rank), computes
    min over j < start[i] of || shift(row_i, row_j) - row_i ||
where shift replaces every coordinate of row_j that beats row_i with row_i's
coordinate, so the distance reduces to sqrt(sum_k max(0, row_j_k - row_i_k)^2).
"""

from libc.math cimport sqrt

import numpy as np

cimport numpy as cnp

cnp.import_array()


def min_shifted_distances(cnp.float64_t[:, ::1] norm, cnp.intp_t[::1] start):
    """norm: (N, m) rank-ordered normalized objectives.

    start[i] = number of strictly better-ranked rows preceding row i.
    Returns an (N,) array; rows with start[i] == 0 get +inf (no peers).
    """
    cdef Py_ssize_t n = norm.shape[0]
    cdef Py_ssize_t m = norm.shape[1]
    cdef cnp.ndarray[cnp.float64_t, ndim=1] out = np.empty(n, dtype=np.float64)
    cdef cnp.float64_t[::1] out_v = out
    cdef Py_ssize_t i, j, k
    cdef double best, acc, d

    for i in range(n):
        if start[i] == 0:
            out_v[i] = np.inf
            continue
        best = np.inf
        for j in range(start[i]):
            acc = 0.0
            for k in range(m):
                d = norm[j, k] - norm[i, k]
                if d > 0.0:
                    acc += d * d
            if acc < best:
                best = acc
        out_v[i] = sqrt(best)
    return out

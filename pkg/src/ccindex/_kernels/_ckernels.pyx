# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled pairwise interaction kernels.

Mirrors the API of ``_pykernels``: min_pair_distance, potential_value,
mass_gradient, euclidean_hessian.  Inputs are C-contiguous float64 arrays.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport pow, sqrt

cnp.import_array()


def min_pair_distance(const double[:, ::1] points):
    cdef Py_ssize_t n = points.shape[0]
    cdef Py_ssize_t d = points.shape[1]
    cdef Py_ssize_t i, j, b
    cdef double best = -1.0, r2, t
    with nogil:
        for i in range(n):
            for j in range(i + 1, n):
                r2 = 0.0
                for b in range(d):
                    t = points[i, b] - points[j, b]
                    r2 += t * t
                if best < 0.0 or r2 < best:
                    best = r2
    return sqrt(best)


def potential_value(const double[:, ::1] points, const double[::1] masses, double alpha):
    cdef Py_ssize_t n = points.shape[0]
    cdef Py_ssize_t d = points.shape[1]
    cdef Py_ssize_t i, j, b
    cdef double total = 0.0, r2, t
    with nogil:
        for i in range(n):
            for j in range(i + 1, n):
                r2 = 0.0
                for b in range(d):
                    t = points[i, b] - points[j, b]
                    r2 += t * t
                total += masses[i] * masses[j] * pow(r2, -0.5 * alpha)
    return total


def mass_gradient(const double[:, ::1] points, const double[::1] masses, double alpha):
    cdef Py_ssize_t n = points.shape[0]
    cdef Py_ssize_t d = points.shape[1]
    out_arr = np.zeros((n, d))
    cdef double[:, ::1] out = out_arr
    cdef Py_ssize_t i, j, b
    cdef double r2, w, t
    with nogil:
        for i in range(n):
            for j in range(i + 1, n):
                r2 = 0.0
                for b in range(d):
                    t = points[i, b] - points[j, b]
                    r2 += t * t
                w = alpha * pow(r2, -0.5 * (alpha + 2.0))
                for b in range(d):
                    t = w * (points[i, b] - points[j, b])
                    out[i, b] -= masses[j] * t
                    out[j, b] += masses[i] * t
    return out_arr


def euclidean_hessian(const double[:, ::1] points, const double[::1] masses, double alpha):
    cdef Py_ssize_t n = points.shape[0]
    cdef Py_ssize_t d = points.shape[1]
    out_arr = np.zeros((n * d, n * d))
    cdef double[:, ::1] out = out_arr
    cdef Py_ssize_t i, j, b, g
    cdef double r2, coeff, proj, val, t
    cdef double u[8]
    if d > 8:
        raise ValueError("spatial dimension > 8 not supported by the compiled kernel")
    with nogil:
        for i in range(n):
            for j in range(i + 1, n):
                r2 = 0.0
                for b in range(d):
                    u[b] = points[i, b] - points[j, b]
                    r2 += u[b] * u[b]
                coeff = alpha * masses[i] * masses[j] * pow(r2, -0.5 * (alpha + 2.0))
                proj = (alpha + 2.0) / r2
                for b in range(d):
                    for g in range(d):
                        val = coeff * proj * u[b] * u[g]
                        if b == g:
                            val -= coeff
                        out[i * d + b, i * d + g] += val
                        out[j * d + b, j * d + g] += val
                        out[i * d + b, j * d + g] -= val
                        out[j * d + b, i * d + g] -= val
    return out_arr

# cython: boundscheck=False, wraparound=False, cdivision=True
"""Cython implementation of the hot array kernels.

Mirrors _pyref exactly; selected at import when the extension is built.
"""
import numpy as np
cimport numpy as cnp
from libc.math cimport sin, cos, fabs, M_PI

cnp.import_array()

BACKEND = "cython"

ENDPOINT_WINDOW = 1e-6

cdef double _WINDOW = 1e-6


def fn_values(int N, t):
    t = np.ascontiguousarray(t, dtype=np.float64)
    cdef cnp.ndarray flat = t.ravel()
    cdef Py_ssize_t n = flat.shape[0]
    out = np.empty(n, dtype=np.float64)
    cdef double[::1] tv = flat
    cdef double[::1] ov = out
    cdef double A = N * M_PI
    cdef int even = (N % 2 == 0)
    cdef Py_ssize_t i
    cdef double ti, s, half, num, xe
    for i in range(n):
        ti = tv[i]
        s = 1.0 - fabs(ti)
        if s < _WINDOW:
            xe = 0.5 * A * s
            ov[i] = (A * A * s / (2.0 * (2.0 - s))) * (
                1.0 - xe * xe / 3.0 + 2.0 * xe * xe * xe * xe / 45.0
            )
        else:
            half = 0.5 * A * ti
            if even:
                num = sin(half)
                num = 2.0 * num * num
            else:
                num = cos(half)
                num = 2.0 * num * num
            ov[i] = num / (1.0 - ti * ti)
    return out.reshape(t.shape)


def legendre_table(int degree_max, t):
    t = np.ascontiguousarray(t, dtype=np.float64)
    cdef cnp.ndarray flat = t.ravel()
    cdef Py_ssize_t n = flat.shape[0]
    P = np.empty((degree_max + 1, n), dtype=np.float64)
    cdef double[::1] tv = flat
    cdef double[:, ::1] pv = P
    cdef Py_ssize_t i
    cdef int l
    cdef double ti
    for i in range(n):
        ti = tv[i]
        pv[0, i] = 1.0
        if degree_max >= 1:
            pv[1, i] = ti
        for l in range(1, degree_max):
            pv[l + 1, i] = ((2 * l + 1) * ti * pv[l, i] - l * pv[l - 1, i]) / (l + 1)
    return P.reshape((degree_max + 1,) + t.shape)

# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled sweep kernel. Must stay bit-identical to _sweep_py.sweep."""
import numpy as np

from libc.math cimport fabs


def sweep(const long long[:, ::1] steps, const double[::1] log2s, const double[::1] cents):
    cdef Py_ssize_t n = steps.shape[0]
    cdef Py_ssize_t m = steps.shape[1]
    cdef Py_ssize_t i, j
    cdef long long k, den
    cdef double num, x, unit_cents, r, worst

    if log2s.shape[0] != m or cents.shape[0] != m:
        raise ValueError("target arrays do not match the step matrix width")
    out_unit = np.empty(n, dtype=np.float64)
    out_dev = np.empty(n, dtype=np.float64)
    cdef double[::1] u = out_unit
    cdef double[::1] d = out_dev

    with nogil:
        for i in range(n):
            num = 0.0
            den = 0
            for j in range(m):
                k = steps[i, j]
                num = num + <double>k * log2s[j]
                den = den + k * k
            x = num / <double>den
            unit_cents = 1200.0 * x
            worst = 0.0
            for j in range(m):
                r = fabs(<double>steps[i, j] * unit_cents - cents[j])
                if r > worst:
                    worst = r
            u[i] = x
            d[i] = worst
    return out_unit, out_dev

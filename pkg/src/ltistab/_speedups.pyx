# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels: uniform-grid convolution and Aberth-Ehrlich roots.

Semantics mirror :mod:`ltistab._fallback`; :mod:`ltistab._kernels` selects
whichever backend imports.
"""
import numpy as np

ctypedef double complex dcomplex


cdef inline dcomplex _horner(const dcomplex* a, Py_ssize_t n, dcomplex s) noexcept:
    cdef dcomplex acc = a[n - 1]
    cdef Py_ssize_t i
    for i in range(n - 2, -1, -1):
        acc = acc * s + a[i]
    return acc


def convolve_uniform(x, h, double dt):
    """dt-scaled full discrete convolution of two equally spaced sample arrays."""
    xa = np.ascontiguousarray(x, dtype=np.float64)
    ha = np.ascontiguousarray(h, dtype=np.float64)
    cdef double[::1] xv = xa
    cdef double[::1] hv = ha
    cdef Py_ssize_t n = xv.shape[0]
    cdef Py_ssize_t m = hv.shape[0]
    out = np.zeros(n + m - 1, dtype=np.float64)
    cdef double[::1] yv = out
    cdef Py_ssize_t i, j
    cdef double xi
    with nogil:
        for i in range(n):
            xi = xv[i]
            if xi != 0.0:
                for j in range(m):
                    yv[i + j] += xi * hv[j]
        for i in range(n + m - 1):
            yv[i] *= dt
    return out


def aberth_roots(coeffs, int max_iter=200, double tol=1e-13):
    """All complex roots of a polynomial by Aberth-Ehrlich simultaneous iteration.

    Same contract as the fallback: ascending coefficients, nonzero leading
    and constant coefficients, unordered unclustered output, full-polynomial
    Newton polish (no deflation).
    """
    a = np.asarray(coeffs, dtype=np.complex128)
    if a.shape[0] < 2:
        raise ValueError("aberth_roots needs a polynomial of degree >= 1")
    if a[-1] == 0:
        raise ValueError("leading coefficient must be nonzero")
    a = np.ascontiguousarray(a / a[-1])
    cdef Py_ssize_t deg = a.shape[0] - 1
    if deg == 1:
        return [complex(-a[0])]
    da = np.ascontiguousarray(a[1:] * np.arange(1, deg + 1))

    cdef double radius = abs(a[0]) ** (1.0 / deg)
    if radius < 1e-3:
        radius = 1e-3
    zs = radius * np.exp(1j * (2.0 * np.pi * np.arange(deg) / deg + 0.4))
    zs = np.ascontiguousarray(zs, dtype=np.complex128)

    cdef dcomplex[::1] av = a
    cdef dcomplex[::1] dav = da
    cdef dcomplex[::1] z = zs
    cdef dcomplex p, dp, ratio, s, d, denom, corr
    cdef Py_ssize_t i, j, it, k
    cdef bint all_small

    for it in range(max_iter):
        all_small = True
        for i in range(deg):
            p = _horner(&av[0], deg + 1, z[i])
            if p == 0:
                continue
            dp = _horner(&dav[0], deg, z[i])
            if dp == 0:
                # deterministic nudge off a stationary point of p
                z[i] = z[i] * 1.000001 + 1e-6
                all_small = False
                continue
            ratio = p / dp
            s = 0
            for j in range(deg):
                if j != i:
                    d = z[i] - z[j]
                    if d == 0:
                        d = 1e-12  # coincident iterates
                    s = s + 1.0 / d
            denom = 1.0 - ratio * s
            if denom == 0:
                corr = ratio
            else:
                corr = ratio / denom
            z[i] = z[i] - corr
            if abs(corr) > tol * (1.0 + abs(z[i])):
                all_small = False
        if all_small:
            break

    # full-polynomial Newton polish (no deflation)
    for i in range(deg):
        for k in range(2):
            p = _horner(&av[0], deg + 1, z[i])
            dp = _horner(&dav[0], deg, z[i])
            if dp == 0:
                break
            corr = p / dp
            # stay local: clusters around multiple roots can have tiny
            # derivatives and huge Newton steps
            if abs(corr) > 0.1 * (1.0 + abs(z[i])):
                break
            z[i] = z[i] - corr

    return [complex(z[i]) for i in range(deg)]

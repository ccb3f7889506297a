"""NumPy implementations of the hot kernels.

These are the reference versions used when the compiled extension
(:mod:`ltistab._speedups`) is unavailable; :mod:`ltistab._kernels` picks the
backend at import time.  Both backends share signatures and semantics.
"""
from __future__ import annotations

import numpy as np


def convolve_uniform(x, h, dt: float) -> np.ndarray:
    """dt-scaled full discrete convolution of two equally spaced sample arrays.

    Riemann-sum approximation of the convolution integral:
    ``y[n] = dt * sum_k x[k] * h[n-k]``, output length ``len(x)+len(h)-1``.
    """
    xa = np.asarray(x, dtype=np.float64)
    ha = np.asarray(h, dtype=np.float64)
    return dt * np.convolve(xa, ha)


def _horner(coeffs: np.ndarray, z: np.ndarray) -> np.ndarray:
    acc = np.full_like(z, coeffs[-1])
    for c in coeffs[-2::-1]:
        acc = acc * z + c
    return acc


def aberth_roots(coeffs, max_iter: int = 200, tol: float = 1e-13) -> list[complex]:
    """All complex roots of a polynomial by Aberth-Ehrlich simultaneous iteration.

    ``coeffs`` are ascending with a nonzero leading coefficient and nonzero
    constant term (the caller strips exact roots at the origin).  Initial
    guesses sit on a circle scaled to the geometric mean of the root
    magnitudes; iteration stops once every correction drops below
    ``tol * (1 + |root|)``.  Roots are finished with two Newton steps on the
    full polynomial -- no deflation, so errors do not accumulate across roots.
    Returned roots are unordered and unclustered.
    """
    a = np.asarray(coeffs, dtype=np.complex128)
    if a.size < 2:
        raise ValueError("aberth_roots needs a polynomial of degree >= 1")
    if a[-1] == 0:
        raise ValueError("leading coefficient must be nonzero")
    a = a / a[-1]
    deg = a.size - 1
    if deg == 1:
        return [complex(-a[0])]
    da = a[1:] * np.arange(1, deg + 1)

    radius = max(abs(a[0]) ** (1.0 / deg), 1e-3)
    z = radius * np.exp(1j * (2.0 * np.pi * np.arange(deg) / deg + 0.4))

    for _ in range(max_iter):
        p = _horner(a, z)
        dp = _horner(da, z)
        stuck = (dp == 0) & (p != 0)
        if stuck.any():
            # deterministic nudge off a stationary point of p
            z = np.where(stuck, z * 1.000001 + 1e-6, z)
            continue
        ratio = np.where(p == 0, 0.0, p / np.where(dp == 0, 1.0, dp))
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, np.inf)
        diff[diff == 0] = 1e-12  # coincident iterates
        s = (1.0 / diff).sum(axis=1)
        denom = 1.0 - ratio * s
        corr = np.where(denom == 0, ratio, ratio / np.where(denom == 0, 1.0, denom))
        z = z - corr
        if np.all(np.abs(corr) <= tol * (1.0 + np.abs(z))):
            break

    for _ in range(2):
        p = _horner(a, z)
        dp = _horner(da, z)
        step = np.where(dp == 0, 0.0, p / np.where(dp == 0, 1.0, dp))
        # a polish step must stay local; clusters around multiple roots can
        # have tiny derivatives and huge Newton steps
        step = np.where(np.abs(step) > 0.1 * (1.0 + np.abs(z)), 0.0, step)
        z = z - step

    return [complex(v) for v in z]

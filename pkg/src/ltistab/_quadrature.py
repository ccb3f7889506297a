"""Adaptive Simpson quadrature for real- or complex-valued integrands."""
from __future__ import annotations

from typing import Callable


def adaptive_simpson(
    f: Callable[[float], complex],
    a: float,
    b: float,
    tol: float,
    max_depth: int = 60,
):
    """Integrate f over [a, b] to roughly absolute tolerance ``tol``.

    Classic recursive scheme with the 15x Richardson acceptance test and
    function-value reuse.  Works for complex integrands (the error metric is
    the modulus).  Kinked integrands such as |signal| simply force deeper
    subdivision near the kinks.
    """
    if a == b:
        return 0.0
    fa, fb = f(a), f(b)
    m = 0.5 * (a + b)
    fm = f(m)
    whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    return _recurse(f, a, b, fa, fm, fb, whole, tol, max_depth)


def _recurse(f, a, b, fa, fm, fb, whole, tol, depth):
    m = 0.5 * (a + b)
    lm = 0.5 * (a + m)
    rm = 0.5 * (m + b)
    flm, frm = f(lm), f(rm)
    left = (m - a) / 6.0 * (fa + 4.0 * flm + fm)
    right = (b - m) / 6.0 * (fm + 4.0 * frm + fb)
    delta = left + right - whole
    if depth <= 0 or abs(delta) <= 15.0 * tol:
        return left + right + delta / 15.0
    half = 0.5 * tol
    return _recurse(f, a, m, fa, flm, fm, left, half, depth - 1) + _recurse(
        f, m, b, fm, frm, fb, right, half, depth - 1
    )

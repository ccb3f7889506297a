"""Complex-coefficient polynomial helpers (ascending coefficient lists).

Internal plumbing for transform assembly and residue extraction, where
intermediates are complex even though every surfaced polynomial is real.
"""
from __future__ import annotations

from ltistab.errors import InternalInvariantError
from ltistab.polynomial import Polynomial

CCoeffs = list[complex]


def c_trim(a: CCoeffs) -> CCoeffs:
    out = list(a)
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out or [0j]


def c_add(a: CCoeffs, b: CCoeffs) -> CCoeffs:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return c_trim(out)


def c_mul(a: CCoeffs, b: CCoeffs) -> CCoeffs:
    out = [0j] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return c_trim(out)


def c_scale(a: CCoeffs, k: complex) -> CCoeffs:
    return c_trim([complex(k) * c for c in a])


def c_eval(a: CCoeffs, s: complex) -> complex:
    acc = a[-1]
    for c in a[-2::-1]:
        acc = acc * s + c
    return acc


def c_from_roots(roots) -> CCoeffs:
    """Monic product prod (s - r)."""
    acc: CCoeffs = [1.0 + 0j]
    for r in roots:
        acc = c_mul(acc, [-complex(r), 1.0 + 0j])
    return acc


def c_taylor_shift(a: CCoeffs, p: complex) -> CCoeffs:
    """Coefficients of a(u + p) in u, by repeated synthetic division by (s - p).

    The k-th remainder of the division chain is the k-th Taylor coefficient.
    """
    work = list(a)
    out: CCoeffs = []
    for _ in range(len(a)):
        rem = work[-1]
        quotient: CCoeffs = []
        for c in work[-2::-1]:
            quotient.append(rem)
            rem = rem * p + c
        out.append(rem)
        work = quotient[::-1]
        if not work:
            break
    return c_trim(out)


def c_series_div(num: CCoeffs, den: CCoeffs, order: int) -> CCoeffs:
    """First ``order`` Taylor coefficients of num/den around 0 (den[0] != 0)."""
    if den[0] == 0:
        raise InternalInvariantError("series division with vanishing constant term")
    g: CCoeffs = []
    for k in range(order):
        acc = num[k] if k < len(num) else 0j
        for j in range(1, k + 1):
            if j < len(den):
                acc -= den[j] * g[k - j]
        g.append(acc / den[0])
    return g


def c_to_real(a: CCoeffs, rel_tol: float = 1e-10) -> Polynomial:
    """Drop imaginary residue (conjugate terms must already have combined)."""
    scale = max(1.0, max(abs(c) for c in a))
    worst = max(abs(c.imag) for c in a)
    if worst > rel_tol * scale:
        raise InternalInvariantError(
            f"complex intermediate failed to realify: residue {worst:.3e} "
            f"on scale {scale:.3e}"
        )
    return Polynomial(tuple(c.real for c in a))

"""Rational transfer functions and block-diagram algebra.

A :class:`TransferFunction` is a proper ratio of real polynomials kept in
canonical form: monic denominator, numerator carrying the overall scale.
Improper ratios are rejected at construction; the signal model downstream
(partial fractions into exponential-polynomial terms plus at most an impulse)
covers proper ratios only, with biproper ones contributing the impulse.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from ltistab.errors import (
    DegenerateLoopError,
    EvaluationAtPoleError,
    ImproperTransferFunctionError,
    ZeroDenominatorError,
)
from ltistab.polynomial import (
    DEFAULT_ROOT_TOL,
    Polynomial,
    RootSet,
    poly_eval,
    poly_roots,
    roots_to_poly,
)

POLE_PROXIMITY = 1e-12


@dataclass(frozen=True)
class TransferFunction:
    """Proper rational function num/den with monic denominator."""

    num: Polynomial
    den: Polynomial

    def __post_init__(self):
        if self.den.is_zero:
            raise ZeroDenominatorError("denominator is identically zero")
        if self.num.degree > self.den.degree:
            raise ImproperTransferFunctionError(
                f"numerator degree {self.num.degree} exceeds denominator "
                f"degree {self.den.degree}"
            )
        lead = self.den.leading
        if lead != 1.0:
            object.__setattr__(self, "num", Polynomial(tuple(c / lead for c in self.num.coeffs)))
            object.__setattr__(self, "den", Polynomial(tuple(c / lead for c in self.den.coeffs)))

    @classmethod
    def constant(cls, k: float) -> "TransferFunction":
        return cls(Polynomial.constant(k), Polynomial.one())

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_biproper(self) -> bool:
        return self.num.degree == self.den.degree

    def poles(self, tol: float = DEFAULT_ROOT_TOL) -> RootSet:
        return tf_poles(self, tol)

    def zeros(self, tol: float = DEFAULT_ROOT_TOL) -> RootSet:
        return tf_zeros(self, tol)

    def __call__(self, s):
        return tf_eval(self, s)


@dataclass(frozen=True)
class PoleZeroForm:
    """gain * prod(s - z_i) / prod(s - p_j) factorization of a transfer function."""

    gain: float
    zeros: RootSet
    poles: RootSet


def tf_new(num: Polynomial, den: Polynomial) -> TransferFunction:
    """Canonical (monic-denominator) proper transfer function."""
    return TransferFunction(num, den)


def tf_poles(h: TransferFunction, tol: float = DEFAULT_ROOT_TOL) -> RootSet:
    """Roots of the denominator (the characteristic equation)."""
    if h.den.degree == 0:
        return RootSet(())
    return poly_roots(h.den, tol)


def tf_zeros(h: TransferFunction, tol: float = DEFAULT_ROOT_TOL) -> RootSet:
    """Roots of the numerator; constant or zero numerators have none."""
    if h.num.degree < 1:
        return RootSet(())
    return poly_roots(h.num, tol)


@lru_cache(maxsize=256)
def _poles_cached(h: TransferFunction) -> tuple[complex, ...]:
    return tf_poles(h).locations()


def tf_eval(h: TransferFunction, s) -> complex:
    """num(s)/den(s); refuses evaluation within 1e-12 of a pole."""
    if h.den.degree >= 1:
        sc = complex(s)
        for p in _poles_cached(h):
            if abs(sc - p) <= POLE_PROXIMITY:
                raise EvaluationAtPoleError(f"s = {sc} coincides with pole {p}")
    den_val = poly_eval(h.den, s)
    if den_val == 0:
        raise EvaluationAtPoleError(f"denominator vanishes at s = {s}")
    return poly_eval(h.num, s) / den_val


def freq_response(h: TransferFunction, omegas: Sequence[float]) -> list[complex]:
    """H(j*omega) at each angular frequency.

    This is the mechanical evaluation on the imaginary axis; whether it is a
    legitimate frequency response (axis inside the region of convergence) is
    the transform layer's check, see ``fourier_from_laplace``.
    """
    return [tf_eval(h, 1j * w) for w in omegas]


def series(h1: TransferFunction, h2: TransferFunction) -> TransferFunction:
    """Cascade: transforms multiply, so num*num / den*den."""
    return tf_new(h1.num * h2.num, h1.den * h2.den)


def parallel(h1: TransferFunction, h2: TransferFunction) -> TransferFunction:
    """Summing junction: (n1*d2 + n2*d1) / (d1*d2)."""
    return tf_new(h1.num * h2.den + h2.num * h1.den, h1.den * h2.den)


def feedback_unity(forward: TransferFunction) -> TransferFunction:
    """Close a negative unity-feedback loop around ``forward``.

    With forward = n/d the closed loop is n / (d + n): the error signal is
    the reference minus the output.
    """
    closed_den = forward.den + forward.num
    if closed_den.is_zero:
        raise DegenerateLoopError("1 + forward is identically zero")
    return tf_new(forward.num, closed_den)


def cancel_common(
    h: TransferFunction, tol: float = DEFAULT_ROOT_TOL
) -> TransferFunction:
    """Remove pole/zero pairs closer than tol*(1+|pole|), preserving gain.

    Cancellation is mirrored across conjugate pairs so the surviving root
    sets stay conjugate-closed.  The result is reconstructed from the
    surviving roots.
    """
    if h.num.is_zero or h.num.degree < 1 or h.den.degree < 1:
        return h
    gain = h.num.leading  # den is monic
    zeros = {i: [z, m] for i, (z, m) in enumerate(h.zeros(tol))}
    poles = {j: [p, m] for j, (p, m) in enumerate(h.poles(tol))}

    def _radius(p: complex) -> float:
        return tol * (1.0 + abs(p))

    # match upper-half-plane and real roots; mirror cancellations below the axis
    for i in sorted(zeros):
        z, mz = zeros[i]
        if mz == 0 or z.imag < 0:
            continue
        for j in sorted(poles):
            p, mp = poles[j]
            if mp == 0 or p.imag < 0:
                continue
            if abs(z - p) <= _radius(p):
                k = min(mz, mp)
                zeros[i][1] -= k
                poles[j][1] -= k
                if z.imag > 0:
                    _cancel_conjugate(zeros, z, k)
                    _cancel_conjugate(poles, p, k)
                break

    surviving_zeros = [(z, m) for z, m in zeros.values() if m > 0]
    surviving_poles = [(p, m) for p, m in poles.values() if m > 0]
    num = roots_to_poly(surviving_zeros, gain)
    den = roots_to_poly(surviving_poles, 1.0)
    return tf_new(num, den)


def _cancel_conjugate(table: dict, z: complex, k: int) -> None:
    target = z.conjugate()
    best = None
    for idx, (w, m) in table.items():
        if m >= k and w.imag < 0 and (best is None or abs(w - target) < abs(table[best][0] - target)):
            best = idx
    if best is not None:
        table[best][1] -= k


def pole_zero_form(h: TransferFunction, tol: float = DEFAULT_ROOT_TOL) -> PoleZeroForm:
    """Factor into gain, zeros, poles (gain is the numerator's leading coefficient)."""
    gain = 0.0 if h.num.is_zero else h.num.leading
    return PoleZeroForm(gain=gain, zeros=tf_zeros(h, tol), poles=tf_poles(h, tol))


def from_pole_zero(pz: PoleZeroForm) -> TransferFunction:
    """Rebuild num/den from a factorization."""
    if pz.gain == 0.0 and not pz.zeros.roots:
        num = Polynomial.zero()
    else:
        num = roots_to_poly(pz.zeros, pz.gain)
    den = roots_to_poly(pz.poles, 1.0)
    return tf_new(num, den)

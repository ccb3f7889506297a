"""Bilateral Laplace transform with region-of-convergence tracking.

The transform of a term sum is assembled per rate over a common denominator:

    c * t**k * exp(p*t) * u(t)   ->   c * k! / (s - p)**(k+1),  Re s > Re p
    c * t**k * exp(p*t) * u(-t)  ->  -c * k! / (s - p)**(k+1),  Re s < Re p

and an impulse of weight w maps to the constant w with full-plane convergence.
The region of convergence is the intersection of the per-term half planes: an
open vertical strip.  The rational part alone does not identify a signal; the
(rational, strip) pair does, which is why inversion takes the strip as input
and reads each pole's side from it.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from ltistab import _cpoly
from ltistab._quadrature import adaptive_simpson
from ltistab.errors import (
    AmbiguousRocError,
    EmptyRocError,
    FourierDoesNotExistError,
    NotAbsolutelyIntegrableError,
    PoleInsideRocError,
)
from ltistab.polynomial import Polynomial
from ltistab.rational import TransferFunction, tf_eval, tf_new, tf_poles
from ltistab.signals import (
    ExpPolySignal,
    ExpPolyTerm,
    Side,
    _causal_per_side,
    _eval_causal,
    _horizon,
    _merged_terms,
    abs_integral,
    make_signal,
)

# pole clustering inside partial fractions: loose enough to re-merge the
# root-finder's spread around multiple poles (spread ~ eps**(1/m)), far
# tighter than any legitimate pole separation
PF_CLUSTER_TOL = 1e-4

FOURIER_QUAD_TOL = 1e-7


@dataclass(frozen=True)
class Roc:
    """Open vertical strip lower < Re s < upper (either bound may be infinite)."""

    lower: float
    upper: float

    def __post_init__(self):
        object.__setattr__(self, "lower", float(self.lower))
        object.__setattr__(self, "upper", float(self.upper))
        if not self.lower < self.upper:
            raise EmptyRocError(f"empty strip: ({self.lower}, {self.upper})")

    @classmethod
    def right_of(cls, sigma: float) -> "Roc":
        return cls(sigma, math.inf)

    @classmethod
    def left_of(cls, sigma: float) -> "Roc":
        return cls(-math.inf, sigma)

    @classmethod
    def full_plane(cls) -> "Roc":
        return cls(-math.inf, math.inf)

    def contains(self, sigma: float) -> bool:
        return self.lower < sigma < self.upper

    @property
    def contains_imag_axis(self) -> bool:
        return self.lower < 0.0 < self.upper

    def intersect(self, other: "Roc") -> "Roc":
        return Roc(max(self.lower, other.lower), min(self.upper, other.upper))


@dataclass(frozen=True)
class LaplaceResult:
    """The (rational function, strip) pair that uniquely represents a signal."""

    tf: TransferFunction
    roc: Roc


@dataclass(frozen=True)
class PfEntry:
    """Terms r_j / (s - pole)**j for j = 1..multiplicity; residues[j-1] = r_j."""

    pole: complex
    multiplicity: int
    residues: tuple[complex, ...]


@dataclass(frozen=True)
class PartialFractions:
    """Strictly proper expansion entries plus the biproper direct constant."""

    entries: tuple[PfEntry, ...]
    direct: float


# ---------------------------------------------------------------------------
# forward transform
# ---------------------------------------------------------------------------

def laplace(sig: ExpPolySignal) -> LaplaceResult:
    """Bilateral Laplace transform of an exponential-polynomial signal.

    Raises :class:`EmptyRocError` when the causal rates do not all lie left
    of the anticausal rates (no common strip, so the transform does not
    exist).
    """
    terms = _merged_terms(sig)
    lower = max((t.rate.real for t in terms if t.side is Side.CAUSAL), default=-math.inf)
    upper = min(
        (t.rate.real for t in terms if t.side is Side.ANTICAUSAL), default=math.inf
    )
    if not lower < upper:
        raise EmptyRocError(
            f"causal rates reach Re p = {lower} but anticausal rates start at {upper}"
        )
    roc = Roc(lower, upper)

    if not terms:
        tf = tf_new(Polynomial.constant(sig.impulse_weight), Polynomial.one())
        return LaplaceResult(tf, roc)

    groups: dict[complex, list[ExpPolyTerm]] = {}
    for t in terms:
        groups.setdefault(t.rate, []).append(t)

    # per rate p: sum_k sgn(side) c_k k! (s-p)^(m-1-k)  over  (s-p)^m
    rate_num: dict[complex, _cpoly.CCoeffs] = {}
    rate_mult: dict[complex, int] = {}
    for rate, group in groups.items():
        m = max(t.power for t in group) + 1
        shifted = [0j] * m  # ascending in (s - p)
        for t in group:
            sign = 1.0 if t.side is Side.CAUSAL else -1.0
            shifted[m - 1 - t.power] += sign * t.coeff * math.factorial(t.power)
        # expand sum c_i (s-p)^i into plain s coefficients
        num: _cpoly.CCoeffs = [0j]
        basis: _cpoly.CCoeffs = [1.0 + 0j]
        for c in shifted:
            num = _cpoly.c_add(num, _cpoly.c_scale(basis, c))
            basis = _cpoly.c_mul(basis, [-rate, 1.0 + 0j])
        rate_num[rate] = num
        rate_mult[rate] = m

    den: _cpoly.CCoeffs = [1.0 + 0j]
    for rate, m in rate_mult.items():
        den = _cpoly.c_mul(den, _cpoly.c_from_roots([rate] * m))

    num_total: _cpoly.CCoeffs = [0j]
    for rate in rate_num:
        other: _cpoly.CCoeffs = [1.0 + 0j]
        for q, mq in rate_mult.items():
            if q != rate:
                other = _cpoly.c_mul(other, _cpoly.c_from_roots([q] * mq))
        num_total = _cpoly.c_add(num_total, _cpoly.c_mul(rate_num[rate], other))

    if sig.impulse_weight != 0.0:
        num_total = _cpoly.c_add(num_total, _cpoly.c_scale(den, sig.impulse_weight))

    tf = tf_new(_cpoly.c_to_real(num_total), _cpoly.c_to_real(den))
    return LaplaceResult(tf, roc)


# ---------------------------------------------------------------------------
# partial fractions and inversion
# ---------------------------------------------------------------------------

def partial_fractions(
    h: TransferFunction, tol: float = PF_CLUSTER_TOL
) -> PartialFractions:
    """Residues by exact polynomial algebra around each computed pole.

    With den = (s-p)**m * Q(s), the residues at p are the first m Taylor
    coefficients of num/Q there: num is Taylor-shifted to p by repeated
    synthetic division, Q is expanded from the other computed poles directly
    in shifted coordinates, and the quotient series is divided out.  No
    numeric differentiation is involved, so repeated poles stay stable.
    """
    if h.num.is_zero:
        return PartialFractions((), 0.0)
    direct = h.num.leading if h.is_biproper else 0.0
    strict = h.num - h.den.scaled(direct) if direct else h.num
    if h.den.degree == 0:
        return PartialFractions((), direct)

    poles = tf_poles(h, tol)
    num_c = [complex(c) for c in strict.coeffs]

    entries: list[PfEntry] = []
    for pole, m in poles:
        if pole.imag < 0.0:
            continue  # mirrored from the conjugate below
        shifted_num = _cpoly.c_taylor_shift(num_c, pole)
        other_roots: list[complex] = []
        for q, mq in poles:
            if q != pole:
                other_roots.extend([q - pole] * mq)
        q_shifted = _cpoly.c_from_roots(other_roots)
        g = _cpoly.c_series_div(shifted_num, q_shifted, m)
        residues = tuple(g[m - j] for j in range(1, m + 1))
        entries.append(PfEntry(pole, m, residues))
        if pole.imag > 0.0:
            entries.append(
                PfEntry(
                    pole.conjugate(), m, tuple(r.conjugate() for r in residues)
                )
            )

    entries.sort(key=lambda e: (e.pole.real, e.pole.imag))
    return PartialFractions(tuple(entries), direct)


def pf_eval(pf: PartialFractions, s: complex) -> complex:
    """Value of the expansion at s (reconstruction oracle)."""
    total = complex(pf.direct)
    for e in pf.entries:
        for j, r in enumerate(e.residues, start=1):
            total += r / (s - e.pole) ** j
    return total


def inverse_laplace(
    h: TransferFunction, roc: Roc, tol: float = PF_CLUSTER_TOL
) -> ExpPolySignal:
    """Invert a rational transform by table lookup on its partial fractions.

    Poles left of the strip become causal terms, poles right of it become
    anticausal terms (with the sign flip of the anticausal table pair), and a
    biproper direct term becomes the impulse weight:

        r_j / (s-p)**j  ->   r_j * t**(j-1) * e^{p t} * u(t)  / (j-1)!
                        or  -r_j * t**(j-1) * e^{p t} * u(-t) / (j-1)!
    """
    pf = partial_fractions(h, tol)
    inside = [e.pole for e in pf.entries if roc.contains(e.pole.real)]
    if inside:
        raise PoleInsideRocError(f"poles {inside} lie inside the strip {roc}")

    terms: list[ExpPolyTerm] = []
    for e in pf.entries:
        if e.pole.real <= roc.lower:
            side, sign = Side.CAUSAL, 1.0
        elif e.pole.real >= roc.upper:
            side, sign = Side.ANTICAUSAL, -1.0
        else:  # defensive: unreachable after the containment check above
            raise AmbiguousRocError(f"pole {e.pole} not classifiable against {roc}")
        for j, r in enumerate(e.residues, start=1):
            terms.append(
                ExpPolyTerm(sign * r / math.factorial(j - 1), j - 1, e.pole, side)
            )
    return make_signal(terms, pf.direct)


def roc_causal(h: TransferFunction) -> Roc:
    """Right half plane to the rightmost pole (causality's strip); full plane
    when there are no poles."""
    poles = tf_poles(h)
    if not poles.roots:
        return Roc.full_plane()
    return Roc.right_of(poles.max_real())


# ---------------------------------------------------------------------------
# Fourier
# ---------------------------------------------------------------------------

def fourier_from_laplace(res: LaplaceResult) -> Callable[[float], complex]:
    """Frequency-response evaluator omega -> H(j omega).

    Legitimate only when the strip contains the imaginary axis (the transform
    restricted to sigma = 0); otherwise the Fourier transform does not exist
    and the request is refused.
    """
    if not res.roc.contains_imag_axis:
        raise FourierDoesNotExistError(
            f"imaginary axis outside the region of convergence {res.roc}"
        )
    tf = res.tf

    def evaluator(omega: float) -> complex:
        return tf_eval(tf, 1j * omega)

    return evaluator


def fourier_numeric(sig: ExpPolySignal, omegas) -> list[complex]:
    """Direct quadrature of the Fourier integral at each frequency.

    Requires absolute integrability (the checked Dirichlet condition; the
    remaining two hold for this signal class by construction).  Serves as the
    independent cross-check for ``fourier_from_laplace``.
    """
    if abs_integral(sig).divergent:
        raise NotAbsolutelyIntegrableError("signal is not absolutely integrable")
    causal, anti = _causal_per_side(_merged_terms(sig))
    t_causal = _horizon(causal, bound=1e-9) if causal else 0.0
    t_anti = _horizon(anti, bound=1e-9) if anti else 0.0

    out: list[complex] = []
    for omega in omegas:
        val = complex(sig.impulse_weight)
        if causal:
            val += adaptive_simpson(
                lambda t: _eval_causal(causal, t).real * complex(math.cos(omega * t), -math.sin(omega * t)),
                0.0,
                t_causal,
                FOURIER_QUAD_TOL,
            )
        if anti:
            # t < 0 side as a function of tau = -t: exp(-j omega t) = exp(+j omega tau)
            val += adaptive_simpson(
                lambda t: _eval_causal(anti, t).real * complex(math.cos(omega * t), math.sin(omega * t)),
                0.0,
                t_anti,
                FOURIER_QUAD_TOL,
            )
        out.append(val)
    return out

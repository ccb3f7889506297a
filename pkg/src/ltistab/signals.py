"""Closed-form exponential-polynomial signals, sampling, and convolution.

A signal is a finite sum of one-sided terms ``c * t**k * exp(p*t)`` (causal:
active for t >= 0, anticausal: for t <= 0) plus an optional impulse of given
weight.  The step convention is u(0) = 1, so both sides are active exactly at
t = 0.  The impulse stays symbolic: it participates in transforms and L1
accounting but can never be sampled.
"""
from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass, field
from typing import IO, Iterable, Union

import numpy as np

from ltistab import _kernels
from ltistab._quadrature import adaptive_simpson
from ltistab.errors import GridMismatchError, ImpulseNotSamplableError

TAIL_BOUND = 1e-10
QUAD_TOL = 1e-8
CSV_FLOAT = "{:.16e}"  # 17 significant digits: exact float round-trip


class Side(enum.Enum):
    CAUSAL = "causal"
    ANTICAUSAL = "anticausal"


@dataclass(frozen=True)
class ExpPolyTerm:
    """One term ``coeff * t**power * exp(rate*t)`` on one side of t = 0."""

    coeff: complex
    power: int
    rate: complex
    side: Side = Side.CAUSAL

    def __post_init__(self):
        object.__setattr__(self, "coeff", complex(self.coeff))
        object.__setattr__(self, "rate", complex(self.rate))
        if self.power < 0:
            raise ValueError("term power must be nonnegative")


@dataclass(frozen=True)
class ExpPolySignal:
    """Real-valued signal: conjugate-closed term sum plus an impulse weight."""

    terms: tuple[ExpPolyTerm, ...] = field(default=())
    impulse_weight: float = 0.0

    @classmethod
    def zero(cls) -> "ExpPolySignal":
        return cls((), 0.0)

    @classmethod
    def impulse(cls, weight: float) -> "ExpPolySignal":
        return cls((), float(weight))

    @classmethod
    def causal_exp(cls, coeff: float, rate: float, power: int = 0) -> "ExpPolySignal":
        """coeff * t**power * exp(rate*t) * u(t) with real parameters."""
        return make_signal([ExpPolyTerm(coeff, power, rate, Side.CAUSAL)])

    @classmethod
    def anticausal_exp(cls, coeff: float, rate: float, power: int = 0) -> "ExpPolySignal":
        """coeff * t**power * exp(rate*t) * u(-t) with real parameters."""
        return make_signal([ExpPolyTerm(coeff, power, rate, Side.ANTICAUSAL)])

    def __add__(self, other: "ExpPolySignal") -> "ExpPolySignal":
        return make_signal(
            list(self.terms) + list(other.terms),
            self.impulse_weight + other.impulse_weight,
        )

    def scaled(self, k: float) -> "ExpPolySignal":
        terms = [ExpPolyTerm(t.coeff * k, t.power, t.rate, t.side) for t in self.terms]
        return ExpPolySignal(tuple(terms), self.impulse_weight * k)


def make_signal(
    terms: Iterable[ExpPolyTerm], impulse_weight: float = 0.0
) -> ExpPolySignal:
    """Normalize and validate a term list into a real signal.

    Terms with identical (side, power, rate) are combined, negligible
    coefficients are dropped, near-real terms are snapped onto the real axis,
    and the remaining complex terms must pair up with conjugates (otherwise
    the signal would not be real-valued).
    """
    merged: dict[tuple[Side, int, complex], complex] = {}
    for t in terms:
        key = (t.side, t.power, t.rate)
        merged[key] = merged.get(key, 0j) + t.coeff

    scale = max([abs(c) for c in merged.values()], default=0.0)
    kept: list[ExpPolyTerm] = []
    for (side, power, rate), coeff in merged.items():
        if coeff == 0 or abs(coeff) <= 1e-12 * scale:
            continue
        if abs(rate.imag) <= 1e-12 * (1.0 + abs(rate)):
            rate = complex(rate.real, 0.0)
            if abs(coeff.imag) <= 1e-9 * abs(coeff):
                coeff = complex(coeff.real, 0.0)
        kept.append(ExpPolyTerm(coeff, power, rate, side))

    _check_real(kept)
    kept.sort(key=lambda t: (t.side.value, t.rate.real, t.rate.imag, t.power))
    return ExpPolySignal(tuple(kept), float(impulse_weight))


def _check_real(terms: list[ExpPolyTerm]) -> None:
    pending = [t for t in terms if t.rate.imag != 0.0 or t.coeff.imag != 0.0]
    used = [False] * len(pending)
    for i, t in enumerate(pending):
        if used[i]:
            continue
        tol = 1e-6 * max(1.0, abs(t.coeff), abs(t.rate))
        for j in range(i + 1, len(pending)):
            u = pending[j]
            if (
                not used[j]
                and u.side == t.side
                and u.power == t.power
                and abs(u.rate - t.rate.conjugate()) <= tol
                and abs(u.coeff - t.coeff.conjugate()) <= tol
            ):
                used[i] = used[j] = True
                break
        else:
            raise ValueError(f"signal is not real-valued: unpaired complex term {t}")


# ---------------------------------------------------------------------------
# evaluation and sampling
# ---------------------------------------------------------------------------

def signal_eval(sig: ExpPolySignal, t: float) -> float:
    """Pointwise value (the impulse contributes nothing at any sampled t).

    With u(0) = 1, both causal and anticausal terms are active at t = 0.
    """
    total = 0j
    for term in sig.terms:
        active = t >= 0.0 if term.side is Side.CAUSAL else t <= 0.0
        if active:
            total += term.coeff * t**term.power * cmath.exp(term.rate * t)
    return total.real


@dataclass
class SampledSignal:
    """Real samples on the uniform grid t0 + k*dt, k = 0..len-1."""

    t0: float
    dt: float
    values: np.ndarray

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=np.float64)
        if self.values.ndim != 1 or self.values.size < 1:
            raise ValueError("values must be a nonempty 1-D array")
        if not self.dt > 0:
            raise ValueError("dt must be positive")

    def __len__(self) -> int:
        return int(self.values.size)

    @property
    def times(self) -> np.ndarray:
        return self.t0 + self.dt * np.arange(self.values.size)

    def index_of(self, t: float) -> int:
        """Grid index of time t; t must lie on the grid to 1e-9*dt."""
        idx = round((t - self.t0) / self.dt)
        if idx < 0 or idx >= len(self) or abs(self.t0 + idx * self.dt - t) > 1e-9 * self.dt:
            raise ValueError(f"t = {t} is not on the sample grid")
        return int(idx)

    def at_time(self, t: float) -> float:
        return float(self.values[self.index_of(t)])

    def to_csv(self, out: IO[str]) -> None:
        """Write ``t,value`` rows at full double precision."""
        out.write("t,value\n")
        for t, v in zip(self.times, self.values):
            out.write(f"{CSV_FLOAT.format(t)},{CSV_FLOAT.format(v)}\n")

    @classmethod
    def from_csv(cls, rows: IO[str]) -> "SampledSignal":
        header = rows.readline().strip()
        if header != "t,value":
            raise ValueError(f"expected header 't,value', got {header!r}")
        ts: list[float] = []
        vs: list[float] = []
        for line in rows:
            line = line.strip()
            if not line:
                continue
            t_str, v_str = line.split(",")
            ts.append(float(t_str))
            vs.append(float(v_str))
        if len(ts) < 1:
            raise ValueError("empty signal")
        if len(ts) == 1:
            return cls(ts[0], 1.0, np.array(vs))
        dts = np.diff(ts)
        dt = float(dts[0])
        if not np.allclose(dts, dt, rtol=1e-9, atol=0):
            raise ValueError("sample times are not uniformly spaced")
        return cls(ts[0], dt, np.array(vs))


def sample(sig: ExpPolySignal, t0: float, t1: float, dt: float) -> SampledSignal:
    """Evaluate on the uniform grid over [t0, t1] (endpoint included)."""
    if sig.impulse_weight != 0.0:
        raise ImpulseNotSamplableError("impulse terms cannot be sampled")
    if not (t0 < t1 and dt > 0):
        raise ValueError("need t0 < t1 and dt > 0")
    n = int(math.floor((t1 - t0) / dt + 1e-9)) + 1
    t = t0 + dt * np.arange(n)
    vals = np.zeros(n)
    for term in sig.terms:
        mask = t >= 0.0 if term.side is Side.CAUSAL else t <= 0.0
        tv = t[mask]
        vals[mask] += (term.coeff * tv**term.power * np.exp(term.rate * tv)).real
    return SampledSignal(t0, dt, vals)


def convolve(x: SampledSignal, h: SampledSignal) -> SampledSignal:
    """Riemann-sum convolution: y[n] = dt * sum_k x[k] h[n-k].

    Output grid starts at x.t0 + h.t0 with length len(x)+len(h)-1.
    """
    if not math.isclose(x.dt, h.dt, rel_tol=1e-12, abs_tol=0.0):
        raise GridMismatchError(f"dt mismatch: {x.dt} vs {h.dt}")
    values = _kernels.convolve_uniform(x.values, h.values, x.dt)
    return SampledSignal(x.t0 + h.t0, x.dt, values)


# ---------------------------------------------------------------------------
# integrability
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IntegralResult:
    """Outcome of an improper integral: a finite value or divergence.

    ``reason`` explains divergence: "growing-term" for a non-decaying mode,
    "impulse" when a Dirac impulse makes a square integral meaningless.
    """

    value: float | None
    divergent: bool
    reason: str | None = None

    @property
    def finite(self) -> bool:
        return not self.divergent

    @staticmethod
    def of(value: float) -> "IntegralResult":
        return IntegralResult(float(value), False)

    @staticmethod
    def diverged(reason: str) -> "IntegralResult":
        return IntegralResult(None, True, reason)


def _merged_terms(sig: ExpPolySignal) -> list[ExpPolyTerm]:
    return list(make_signal(sig.terms).terms)


def _reflected(term: ExpPolyTerm) -> ExpPolyTerm:
    """Anticausal term viewed as a causal function of tau = -t."""
    return ExpPolyTerm(term.coeff * (-1.0) ** term.power, term.power, -term.rate, Side.CAUSAL)


def _causal_per_side(terms: list[ExpPolyTerm]) -> tuple[list[ExpPolyTerm], list[ExpPolyTerm]]:
    causal = [t for t in terms if t.side is Side.CAUSAL]
    anti = [_reflected(t) for t in terms if t.side is Side.ANTICAUSAL]
    return causal, anti


def _has_growth(causal_terms: list[ExpPolyTerm]) -> bool:
    # after merging, any surviving term with a non-negative rate cannot be
    # cancelled by terms at other rates
    return any(t.rate.real >= 0.0 for t in causal_terms)


def _term_l1(coeff: complex, power: int, rate: complex) -> float:
    """Exact integral of |c| * t**k * e^{Re(p) t} over [0, inf), Re p < 0."""
    lam = -rate.real
    return abs(coeff) * math.factorial(power) / lam ** (power + 1)


def _tail_bound(terms: list[ExpPolyTerm], horizon: float) -> float:
    """Upper bound on sum |c| t^k e^{Re p t} integrated over [T, inf)."""
    total = 0.0
    for t in terms:
        lam = -t.rate.real
        acc = 0.0
        for j in range(t.power + 1):
            acc += (
                math.factorial(t.power)
                / math.factorial(t.power - j)
                * horizon ** (t.power - j)
                / lam ** (j + 1)
            )
        total += abs(t.coeff) * math.exp(-lam * horizon) * acc
    return total


def _horizon(terms: list[ExpPolyTerm], bound: float = TAIL_BOUND) -> float:
    horizon = 1.0
    for _ in range(200):
        if _tail_bound(terms, horizon) <= bound:
            return horizon
        horizon *= 2.0
    raise ValueError("could not bound the integral tail")  # unreachable for decaying terms


def _eval_causal(terms: list[ExpPolyTerm], t: float) -> complex:
    total = 0j
    for term in terms:
        total += term.coeff * t**term.power * cmath.exp(term.rate * t)
    return total


def _side_l1(terms: list[ExpPolyTerm]) -> float:
    """L1 norm of a decaying causal term sum."""
    if not terms:
        return 0.0
    if len(terms) == 1:
        t = terms[0]
        return _term_l1(t.coeff, t.power, t.rate)
    real_same_sign = all(
        t.rate.imag == 0.0 and t.coeff.imag == 0.0 for t in terms
    ) and len({math.copysign(1.0, t.coeff.real) for t in terms}) == 1
    if real_same_sign:
        # |sum| = sum of |term| pointwise, so the closed forms just add
        return sum(_term_l1(t.coeff, t.power, t.rate) for t in terms)
    horizon = _horizon(terms)
    return float(
        adaptive_simpson(lambda t: abs(_eval_causal(terms, t).real), 0.0, horizon, QUAD_TOL)
    )


def abs_integral(sig: ExpPolySignal) -> IntegralResult:
    """L1 norm of the signal, or divergence.

    Single decaying terms use the closed form |c| k! / (-Re p)^{k+1}; real
    same-sign sums add term-wise; everything else falls back to adaptive
    quadrature on a horizon whose analytic exponential tail bound is below
    1e-10.  The impulse adds |weight|.
    """
    causal, anti = _causal_per_side(_merged_terms(sig))
    if _has_growth(causal) or _has_growth(anti):
        return IntegralResult.diverged("growing-term")
    total = abs(sig.impulse_weight)
    total += _side_l1(causal)
    total += _side_l1(anti)
    return IntegralResult.of(total)


def square_integral(sig: ExpPolySignal) -> IntegralResult:
    """Integral of the squared signal, or divergence.

    An impulse is not square integrable (flagged distinctly).  For decaying
    terms the square expands into pairwise products c_i * conj(c_j) *
    t^{k_i+k_j} * e^{(p_i + conj(p_j)) t}, each with the exact closed form
    m! / z^{m+1}, so no quadrature is needed.
    """
    if sig.impulse_weight != 0.0:
        return IntegralResult.diverged("impulse")
    causal, anti = _causal_per_side(_merged_terms(sig))
    if _has_growth(causal) or _has_growth(anti):
        return IntegralResult.diverged("growing-term")
    total = 0.0
    for terms in (causal, anti):
        acc = 0j
        for a in terms:
            for b in terms:
                z = -(a.rate + b.rate.conjugate())
                m = a.power + b.power
                acc += a.coeff * b.coeff.conjugate() * math.factorial(m) / z ** (m + 1)
        total += acc.real
    return IntegralResult.of(total)

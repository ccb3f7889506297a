"""Absolute and relative stability verdicts, and feedback gain design.

Three independent routes decide BIBO stability:

* pole locations of a causal rational system (all real parts negative),
* the region of convergence containing the whole imaginary axis,
* absolute integrability of the impulse response itself.

Pole real parts come from floating-point root finding, so a tolerance band
``epsilon`` around the axis yields a third verdict, Marginal, instead of a
hard yes/no.  Relative stability is read off the dominant pole: the farther
left it sits, the faster the response decays.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ltistab.errors import BoundViolatedError, NotStableError
from ltistab.polynomial import DEFAULT_ROOT_TOL
from ltistab.rational import TransferFunction, feedback_unity, series, tf_poles
from ltistab.signals import ExpPolySignal, SampledSignal, abs_integral, convolve
from ltistab.transforms import LaplaceResult

DEFAULT_EPSILON = 1e-9
SETTLING_FACTOR = 4.0  # 2%-band convention for a dominant real pole


class Verdict(enum.Enum):
    STABLE = "stable"
    MARGINAL = "marginal"
    UNSTABLE = "unstable"


class Route(enum.Enum):
    POLES = "poles"
    ROC = "roc"
    NUMERIC_L1 = "numeric_l1"


@dataclass(frozen=True)
class StabilityReport:
    """Verdict plus relative-stability metrics.

    ``spectral_abscissa`` is the largest pole real part (-inf for a pole-free
    system).  ``dominant_pole`` is a pole attaining it (None when pole-free);
    ``dominant_multiplicity`` lets callers distinguish repeated axis poles,
    which this report still labels Marginal.  ``decay_time_constant`` and
    ``settling_time_estimate`` are +inf unless the verdict is Stable.
    """

    verdict: Verdict
    spectral_abscissa: float
    dominant_pole: complex | None
    decay_time_constant: float
    settling_time_estimate: float
    route: Route
    dominant_multiplicity: int = 0

    def to_json_dict(self) -> dict:
        pole = self.dominant_pole
        return {
            "verdict": self.verdict.value,
            "spectral_abscissa": self.spectral_abscissa,
            "dominant_pole": None if pole is None else {"re": pole.real, "im": pole.imag},
            "decay_time_constant": self.decay_time_constant,
            "settling_time_estimate": self.settling_time_estimate,
            "route": self.route.value,
            "dominant_multiplicity": self.dominant_multiplicity,
        }


@dataclass(frozen=True)
class GainRange:
    """Open/closed interval of stabilizing proportional gains."""

    lower: float
    upper: float
    boundary_open: tuple[bool, bool] = (True, True)

    def contains(self, k: float) -> bool:
        lo_ok = k > self.lower if self.boundary_open[0] else k >= self.lower
        hi_ok = k < self.upper if self.boundary_open[1] else k <= self.upper
        return lo_ok and hi_ok

    def to_json_dict(self) -> dict:
        return {
            "lower": self.lower,
            "upper": self.upper,
            "boundary_open": list(self.boundary_open),
        }


@dataclass(frozen=True)
class NumericVerdict:
    """Verdict from the integrability route, with the L1 value when finite."""

    verdict: Verdict
    l1_norm: float | None


@dataclass(frozen=True)
class BoundCertificate:
    """Observed worst output against the analytic BIBO bound."""

    max_abs_output: float
    bound: float
    l1_estimate: float
    trials: int
    seed: int
    input_bound: float


# ---------------------------------------------------------------------------
# verdicts
# ---------------------------------------------------------------------------

def _classify(abscissa: float, epsilon: float) -> Verdict:
    if abscissa < -epsilon:
        return Verdict.STABLE
    if abscissa > epsilon:
        return Verdict.UNSTABLE
    return Verdict.MARGINAL


def bibo_from_poles(
    h: TransferFunction,
    epsilon: float = DEFAULT_EPSILON,
    tol: float = DEFAULT_ROOT_TOL,
) -> StabilityReport:
    """Pole-location route for a causal rational system.

    Stable when every pole satisfies Re p < -epsilon, Unstable when any pole
    has Re p > +epsilon, Marginal otherwise.  A pole-free system (pure gain,
    possibly with an impulse feedthrough) is Stable with abscissa -inf.
    """
    poles = tf_poles(h, tol)
    if not poles.roots:
        return StabilityReport(
            verdict=Verdict.STABLE,
            spectral_abscissa=-math.inf,
            dominant_pole=None,
            decay_time_constant=0.0,
            settling_time_estimate=0.0,
            route=Route.POLES,
            dominant_multiplicity=0,
        )
    abscissa = poles.max_real()
    candidates = [(p, m) for p, m in poles if p.real == abscissa]
    # deterministic pick: smallest |Im|, preferring the upper half plane
    dominant, mult = min(candidates, key=lambda it: (abs(it[0].imag), -it[0].imag))
    verdict = _classify(abscissa, epsilon)
    if verdict is Verdict.STABLE:
        decay = 1.0 / abs(abscissa)  # 0.0 when abscissa is -inf
        settle = SETTLING_FACTOR / abs(abscissa)
    else:
        decay = math.inf
        settle = math.inf
    return StabilityReport(
        verdict=verdict,
        spectral_abscissa=abscissa,
        dominant_pole=dominant,
        decay_time_constant=decay,
        settling_time_estimate=settle,
        route=Route.POLES,
        dominant_multiplicity=mult,
    )


def bibo_from_roc(res: LaplaceResult, epsilon: float = DEFAULT_EPSILON) -> Verdict:
    """ROC route: stable iff the strip contains the whole imaginary axis.

    With the causal strip (lower = spectral abscissa, upper = +inf) this
    agrees with the pole route by construction.
    """
    if res.roc.lower < -epsilon and res.roc.upper > epsilon:
        return Verdict.STABLE
    if res.roc.lower > epsilon or res.roc.upper < -epsilon:
        return Verdict.UNSTABLE
    return Verdict.MARGINAL


def bibo_numeric(h_sig: ExpPolySignal) -> NumericVerdict:
    """Integrability route: finite L1 norm of the impulse response means stable."""
    result = abs_integral(h_sig)
    if result.divergent:
        return NumericVerdict(Verdict.UNSTABLE, None)
    return NumericVerdict(Verdict.STABLE, result.value)


# ---------------------------------------------------------------------------
# the adversarial construction and the bound
# ---------------------------------------------------------------------------

def adversarial_input(h: SampledSignal) -> SampledSignal:
    """The bounded input x(t) = sgn(h(-t)) on the time-reversed grid.

    Convolving it with h makes the output at t = 0 equal dt * sum|h| -- the
    discrete form of the necessity argument: if the L1 norm diverges, this
    unit-bounded input drives the output out of any bound.
    """
    values = np.sign(h.values[::-1])
    t_last = h.t0 + (len(h) - 1) * h.dt
    return SampledSignal(-t_last, h.dt, values)


def adversarial_output_peak(h: SampledSignal) -> float:
    """y(0) of the adversarial input: exactly dt * sum|h| up to rounding."""
    y = convolve(adversarial_input(h), h)
    return y.at_time(0.0)


def bound_witness(
    h: SampledSignal, trials: int, input_bound: float = 1.0, seed: int = 0
) -> BoundCertificate:
    """Drive random inputs bounded by ``input_bound`` through h.

    Every output sample must respect |y| <= Bx * (dt * sum|h|) * (1 + 1e-9);
    a violation is an implementation bug, not a domain outcome, and raises
    :class:`BoundViolatedError`.  Deterministic for a fixed seed.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = np.random.default_rng(seed)
    l1 = float(h.dt * np.abs(h.values).sum())
    bound = input_bound * l1 * (1.0 + 1e-9)
    worst = 0.0
    for _ in range(trials):
        x = SampledSignal(0.0, h.dt, rng.uniform(-input_bound, input_bound, len(h)))
        y = convolve(x, h)
        worst = max(worst, float(np.abs(y.values).max()))
    if worst > bound:
        raise BoundViolatedError(f"max |y| = {worst} exceeds bound {bound}")
    return BoundCertificate(
        max_abs_output=worst,
        bound=bound,
        l1_estimate=l1,
        trials=trials,
        seed=seed,
        input_bound=input_bound,
    )


# ---------------------------------------------------------------------------
# feedback gain design
# ---------------------------------------------------------------------------

def gain_range_first_order(a: float) -> GainRange:
    """Stabilizing gains for plant 1/(s+a) under proportional unity feedback.

    The closed-loop pole is -(K + a), so K + a > 0, i.e. K > -a, regardless
    of the sign of a; an unstable plant (a < 0) just leaves a smaller range.
    """
    return GainRange(lower=-a, upper=math.inf, boundary_open=(True, True))


def gain_sweep(
    plant: TransferFunction,
    gains: Sequence[float],
    epsilon: float = DEFAULT_EPSILON,
) -> list[tuple[float, StabilityReport]]:
    """Close the unity loop at each gain and report pole-route stability.

    Entries are independent; results are ordered by the input grid.  The
    spectral abscissa per gain makes the relative-stability trend (larger
    gain pushes the dominant pole left, for first-order plants) observable.
    """
    out: list[tuple[float, StabilityReport]] = []
    for k in gains:
        closed = feedback_unity(series(TransferFunction.constant(k), plant))
        out.append((float(k), bibo_from_poles(closed, epsilon)))
    return out


def settling_time(report: StabilityReport) -> float:
    """2%-band settling estimate 4/|spectral abscissa| for a Stable report."""
    if report.verdict is not Verdict.STABLE:
        raise NotStableError(f"settling time undefined for verdict {report.verdict.value}")
    return SETTLING_FACTOR / abs(report.spectral_abscissa)

"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 parse/domain error, 3 analysis
refusal (e.g. the Fourier transform does not exist), 4 internal invariant
violation.  Analysis results go to stdout as JSON unless ``--csv``; signal
and frequency tables are always CSV.  The marginal-band default comes from
``LTISTAB_EPSILON`` when set; an explicit ``--epsilon`` flag wins.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import sys

import numpy as np

from ltistab import _jsonfmt
from ltistab.diagrams import elaborate_diagram
from ltistab.errors import (
    AmbiguousRocError,
    BoundViolatedError,
    FourierDoesNotExistError,
    InternalInvariantError,
    LtistabError,
    NotAbsolutelyIntegrableError,
    NotStableError,
)
from ltistab.expressions import format_tf, tf_from_text
from ltistab.rational import TransferFunction, tf_poles, tf_zeros
from ltistab.signals import SampledSignal, convolve, sample
from ltistab.stability import DEFAULT_EPSILON, adversarial_input, bibo_from_poles, gain_sweep
from ltistab.transforms import LaplaceResult, fourier_from_laplace, inverse_laplace, roc_causal

_REFUSALS = (FourierDoesNotExistError, NotAbsolutelyIntegrableError, NotStableError)
_INTERNAL = (BoundViolatedError, AmbiguousRocError, InternalInvariantError)


class _UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):  # keep usage failures on exit code 1
        raise _UsageError(message)


def _build_parser() -> _ArgumentParser:
    parser = _ArgumentParser(
        prog="ltistab",
        description="Stability analysis of continuous-time LTI systems.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    p = sub.add_parser("poles", help="poles, zeros, and gain of a transfer function")
    p.add_argument("expr", help="transfer-function expression, e.g. '1/(s+1)'")
    p.add_argument("--csv", action="store_true", help="emit CSV instead of JSON")

    p = sub.add_parser("stability", help="stability verdict from pole locations")
    p.add_argument("expr")
    p.add_argument("--epsilon", type=float, default=None, help="marginal band half-width")
    p.add_argument("--csv", action="store_true")

    p = sub.add_parser("impulse", help="impulse response sampled to CSV")
    p.add_argument("expr")
    p.add_argument("--t1", type=float, required=True, help="end of the sample window")
    p.add_argument("--dt", type=float, required=True, help="sample step")

    p = sub.add_parser("freq", help="frequency response table (refused if it does not exist)")
    p.add_argument("expr")
    p.add_argument("--omega-min", type=float, required=True)
    p.add_argument("--omega-max", type=float, required=True)
    p.add_argument("--points", type=int, required=True)

    p = sub.add_parser("feedback", help="elaborate a block-diagram JSON file")
    p.add_argument("diagram", help="path to the diagram JSON")
    p.add_argument("--epsilon", type=float, default=None)
    p.add_argument("--csv", action="store_true")

    p = sub.add_parser("sweep", help="close a unity loop over a gain grid")
    p.add_argument("plant")
    p.add_argument("--k-min", type=float, required=True)
    p.add_argument("--k-max", type=float, required=True)
    p.add_argument("--points", type=int, required=True)
    p.add_argument("--epsilon", type=float, default=None)
    p.add_argument("--csv", action="store_true")

    p = sub.add_parser("convolve", help="convolve two sampled signals (CSV in, CSV out)")
    p.add_argument("x_csv")
    p.add_argument("h_csv")

    p = sub.add_parser("adversarial", help="worst-case bounded input sgn(h(-t)) for a sampled h")
    p.add_argument("h_csv")

    return parser


def _epsilon_of(args) -> float:
    if getattr(args, "epsilon", None) is not None:
        return args.epsilon
    env = os.environ.get("LTISTAB_EPSILON")
    if env is not None:
        try:
            return float(env)
        except ValueError:
            raise _UsageError(f"LTISTAB_EPSILON is not a number: {env!r}")
    return DEFAULT_EPSILON


def _emit(text: str) -> None:
    sys.stdout.write(text)
    if not text.endswith("\n"):
        sys.stdout.write("\n")


def _emit_rows(header: str, rows) -> None:
    out = [header]
    out.extend(_jsonfmt.csv_row(r) for r in rows)
    _emit("\n".join(out))


def _root_entries(roots) -> list[dict]:
    return [
        {"re": z.real, "im": z.imag, "multiplicity": m} for z, m in roots
    ]


def _load_signal(path: str) -> SampledSignal:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            return SampledSignal.from_csv(fh)
        except ValueError as exc:
            raise LtistabError(f"{path}: {exc}") from exc


def _signal_csv(sig: SampledSignal) -> None:
    rows = zip(sig.times, sig.values)
    _emit_rows("t,value", ([t, v] for t, v in rows))


_STABILITY_COLUMNS = (
    "verdict,spectral_abscissa,dominant_pole_re,dominant_pole_im,"
    "dominant_multiplicity,decay_time_constant,settling_time_estimate,route"
)


def _stability_cells(report) -> list:
    pole = report.dominant_pole
    return [
        report.verdict.value,
        report.spectral_abscissa,
        "" if pole is None else pole.real,
        "" if pole is None else pole.imag,
        report.dominant_multiplicity,
        report.decay_time_constant,
        report.settling_time_estimate,
        report.route.value,
    ]


# --- subcommands ---------------------------------------------------------

def _cmd_poles(args) -> int:
    h = tf_from_text(args.expr)
    poles = tf_poles(h)
    zeros = tf_zeros(h)
    gain = 0.0 if h.num.is_zero else h.num.leading
    if args.csv:
        rows = [["pole", z.real, z.imag, m] for z, m in poles]
        rows += [["zero", z.real, z.imag, m] for z, m in zeros]
        _emit_rows("kind,re,im,multiplicity", rows)
    else:
        _emit(
            _jsonfmt.dumps(
                {
                    "expr": format_tf(h),
                    "gain": gain,
                    "poles": _root_entries(poles),
                    "zeros": _root_entries(zeros),
                }
            )
        )
    return 0


def _cmd_stability(args) -> int:
    h = tf_from_text(args.expr)
    report = bibo_from_poles(h, _epsilon_of(args))
    if args.csv:
        _emit_rows(_STABILITY_COLUMNS, [_stability_cells(report)])
    else:
        _emit(_jsonfmt.dumps(report.to_json_dict()))
    return 0


def _cmd_impulse(args) -> int:
    h = tf_from_text(args.expr)
    sig = inverse_laplace(h, roc_causal(h))
    _signal_csv(sample(sig, 0.0, args.t1, args.dt))
    return 0


def _cmd_freq(args) -> int:
    if args.points < 1:
        raise _UsageError("--points must be >= 1")
    h = tf_from_text(args.expr)
    evaluator = fourier_from_laplace(LaplaceResult(h, roc_causal(h)))
    omegas = np.linspace(args.omega_min, args.omega_max, args.points)
    rows = []
    for w in omegas:
        v = evaluator(float(w))
        rows.append(
            [float(w), v.real, v.imag, abs(v), math.degrees(math.atan2(v.imag, v.real))]
        )
    _emit_rows("omega,re,im,mag,phase_deg", rows)
    return 0


def _cmd_feedback(args) -> int:
    with open(args.diagram, "r", encoding="utf-8") as fh:
        try:
            spec = json.load(fh)
        except json.JSONDecodeError as exc:
            raise LtistabError(f"{args.diagram}: invalid JSON: {exc}") from exc
    h = elaborate_diagram(spec)
    report = bibo_from_poles(h, _epsilon_of(args))
    if args.csv:
        _emit_rows(
            "expr," + _STABILITY_COLUMNS,
            [[format_tf(h)] + _stability_cells(report)],
        )
    else:
        _emit(
            _jsonfmt.dumps(
                {
                    "expr": format_tf(h),
                    "num": list(h.num.coeffs),
                    "den": list(h.den.coeffs),
                    "stability": report.to_json_dict(),
                }
            )
        )
    return 0


def _cmd_sweep(args) -> int:
    if args.points < 2:
        raise _UsageError("--points must be >= 2")
    plant = tf_from_text(args.plant)
    grid = [float(k) for k in np.linspace(args.k_min, args.k_max, args.points)]
    results = gain_sweep(plant, grid, _epsilon_of(args))
    if args.csv:
        rows = [[k, r.verdict.value, r.spectral_abscissa] for k, r in results]
        _emit_rows("k,verdict,spectral_abscissa", rows)
    else:
        _emit(
            _jsonfmt.dumps(
                [
                    {"k": k, "verdict": r.verdict.value, "spectral_abscissa": r.spectral_abscissa}
                    for k, r in results
                ]
            )
        )
    return 0


def _cmd_convolve(args) -> int:
    x = _load_signal(args.x_csv)
    h = _load_signal(args.h_csv)
    _signal_csv(convolve(x, h))
    return 0


def _cmd_adversarial(args) -> int:
    h = _load_signal(args.h_csv)
    _signal_csv(adversarial_input(h))
    return 0


_COMMANDS = {
    "poles": _cmd_poles,
    "stability": _cmd_stability,
    "impulse": _cmd_impulse,
    "freq": _cmd_freq,
    "feedback": _cmd_feedback,
    "sweep": _cmd_sweep,
    "convolve": _cmd_convolve,
    "adversarial": _cmd_adversarial,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        sys.stderr.write(f"ltistab: usage error: {exc}\n")
        return 1
    except SystemExit as exc:  # --help
        code = exc.code
        return 0 if code in (0, None) else int(code)

    try:
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        sys.stderr.write(f"ltistab: usage error: {exc}\n")
        return 1
    except _REFUSALS as exc:
        sys.stderr.write(f"ltistab: refused: {exc}\n")
        return 3
    except _INTERNAL as exc:
        sys.stderr.write(f"ltistab: internal invariant violation: {exc}\n")
        return 4
    except LtistabError as exc:
        sys.stderr.write(f"ltistab: error: {exc}\n")
        return 2
    except (OSError, ValueError) as exc:
        sys.stderr.write(f"ltistab: error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Shared random-instance generators for the test suite (seeded, deterministic)."""
from __future__ import annotations

import numpy as np

from ltistab import ExpPolySignal, ExpPolyTerm, Polynomial, Side, make_signal, roots_to_poly, tf_new


def draw_rootset(
    rng: np.random.Generator,
    max_groups: int = 3,
    max_mult: int = 1,
    disk: float = 5.0,
    min_sep: float = 0.5,
    re_min: float | None = None,
    re_max: float | None = None,
    exclude_band: float | None = None,
    max_total: int = 10,
) -> list[tuple[complex, int]]:
    """Conjugate-closed roots with pairwise separation >= min_sep.

    Optional constraints: real parts within [re_min, re_max], or real parts
    kept out of the band |Re z| <= exclude_band.  The total multiplicity is
    capped at max_total.
    """
    n_groups = int(rng.integers(1, max_groups + 1))
    roots: list[tuple[complex, int]] = []
    placed: list[complex] = []
    for _ in range(n_groups):
        budget = max_total - sum(m for _, m in roots)
        if budget < 1:
            break
        mult = int(rng.integers(1, min(max_mult, budget) + 1))
        for _ in range(200):
            re = rng.uniform(re_min if re_min is not None else -disk,
                             re_max if re_max is not None else disk)
            if exclude_band is not None and abs(re) <= exclude_band:
                continue
            if rng.random() < 0.5 or 2 * mult > budget:
                z = complex(re, 0.0)
                candidates = [z]
            else:
                z = complex(re, rng.uniform(min_sep, disk / 2))
                candidates = [z, z.conjugate()]
            if abs(z) > disk:
                continue
            if all(abs(c - p) >= min_sep for c in candidates for p in placed):
                placed.extend(candidates)
                roots.extend((c, mult) for c in candidates)
                break
    return roots


def random_proper_tf(
    rng: np.random.Generator,
    max_pole_groups: int = 3,
    max_mult: int = 1,
    exclude_band: float | None = None,
    re_max: float | None = None,
):
    """Random proper transfer function built from controlled pole/zero sets."""
    poles = draw_rootset(
        rng, max_groups=max_pole_groups, max_mult=max_mult,
        exclude_band=exclude_band, re_max=re_max,
    )
    deg_den = sum(m for _, m in poles)
    den = roots_to_poly(poles, 1.0)
    deg_num = int(rng.integers(0, deg_den + 1))
    zeros = []
    while sum(m for _, m in zeros) < deg_num:
        remaining = deg_num - sum(m for _, m in zeros)
        if remaining >= 2 and rng.random() < 0.4:
            z = complex(rng.uniform(-4, 4), rng.uniform(0.3, 3))
            zeros.extend([(z, 1), (z.conjugate(), 1)])
        else:
            zeros.append((complex(rng.uniform(-4, 4), 0.0), 1))
    gain = float(rng.uniform(0.2, 3.0) * rng.choice([-1.0, 1.0]))
    num = roots_to_poly(zeros, gain)
    return tf_new(num, den)


def random_two_sided_signal(
    rng: np.random.Generator,
    max_rates_per_side: int = 2,
    max_power: int = 0,
    with_impulse: bool = False,
) -> ExpPolySignal:
    """Random signal whose transform exists: causal rates left of anticausal ones.

    Distinct rates are separated by at least 0.5; coefficients stay away from
    zero so term-by-term comparisons are meaningful.
    """
    terms: list[ExpPolyTerm] = []

    def _add_side(side: Side, re_lo: float, re_hi: float) -> None:
        n = int(rng.integers(0 if side is Side.ANTICAUSAL else 1, max_rates_per_side + 1))
        placed: list[complex] = []
        for _ in range(n):
            for _ in range(100):
                re = rng.uniform(re_lo, re_hi)
                if rng.random() < 0.35:
                    rate = complex(re, rng.uniform(0.5, 3.0))
                    pair = [rate, rate.conjugate()]
                else:
                    rate = complex(re, 0.0)
                    pair = [rate]
                if all(abs(c - p) >= 0.5 for c in pair for p in placed):
                    placed.extend(pair)
                    break
            else:
                continue
            top_power = int(rng.integers(0, max_power + 1))
            for k in range(top_power + 1):
                c = rng.uniform(0.2, 2.0) * rng.choice([-1.0, 1.0])
                if len(pair) == 2:
                    coeff = complex(c, rng.uniform(0.2, 1.0))
                    terms.append(ExpPolyTerm(coeff, k, pair[0], side))
                    terms.append(ExpPolyTerm(coeff.conjugate(), k, pair[1], side))
                else:
                    terms.append(ExpPolyTerm(complex(c), k, pair[0], side))

    _add_side(Side.CAUSAL, -4.0, -0.3)
    _add_side(Side.ANTICAUSAL, 0.3, 4.0)
    impulse = float(rng.uniform(0.5, 2.0)) if with_impulse and rng.random() < 0.5 else 0.0
    return make_signal(terms, impulse)


def random_stable_causal_signal(
    rng: np.random.Generator, max_rates: int = 3, max_power: int = 1
) -> ExpPolySignal:
    """Random decaying causal signal (all rates in the open left half plane)."""
    terms: list[ExpPolyTerm] = []
    placed: list[complex] = []
    n = int(rng.integers(1, max_rates + 1))
    for _ in range(n):
        for _ in range(100):
            re = rng.uniform(-4.0, -0.3)
            if rng.random() < 0.4:
                rate = complex(re, rng.uniform(0.5, 3.0))
                pair = [rate, rate.conjugate()]
            else:
                rate = complex(re, 0.0)
                pair = [rate]
            if all(abs(c - p) >= 0.5 for c in pair for p in placed):
                placed.extend(pair)
                break
        else:
            continue
        top_power = int(rng.integers(0, max_power + 1))
        for k in range(top_power + 1):
            c = rng.uniform(0.2, 2.0) * rng.choice([-1.0, 1.0])
            if len(pair) == 2:
                coeff = complex(c, rng.uniform(0.2, 1.0))
                terms.append(ExpPolyTerm(coeff, k, pair[0], Side.CAUSAL))
                terms.append(ExpPolyTerm(coeff.conjugate(), k, pair[1], Side.CAUSAL))
            else:
                terms.append(ExpPolyTerm(complex(c), k, pair[0], Side.CAUSAL))
    return make_signal(terms)


def match_rootsets(reported, expected, tol_simple=1e-6, tol_clustered=1e-3) -> None:
    """Assert the reported roots cover the expected multiset within tolerance."""
    rep = []
    for z, m in reported:
        rep.extend([z] * m)
    exp = []
    for z, m in expected:
        exp.extend([(z, m)] * m)
    assert len(rep) == len(exp), f"total multiplicity {len(rep)} != {len(exp)}"
    used = [False] * len(rep)
    for z, m in exp:
        tol = tol_simple if m <= 2 else tol_clustered
        best, best_d = None, None
        for i, r in enumerate(rep):
            if not used[i]:
                d = abs(r - z)
                if best_d is None or d < best_d:
                    best, best_d = i, d
        assert best is not None and best_d <= tol, (
            f"expected root {z} (mult {m}): nearest reported at distance {best_d}"
        )
        used[best] = True

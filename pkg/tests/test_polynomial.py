import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import draw_rootset, match_rootsets
from ltistab import (
    DegreeZeroError,
    NonConjugateRootsError,
    Polynomial,
    ZeroPolynomialError,
    poly_add,
    poly_eval,
    poly_mul,
    poly_roots,
    roots_to_poly,
)

P = Polynomial


def test_add_cancellation_to_constant():
    assert poly_add(P((1.0, 1.0)), P((2.0, -1.0))) == P((3.0,))


def test_add_identity():
    p = P((2.0, 0.0, 5.0))
    assert poly_add(p, P.zero()) == p


def test_add_hand_coefficients():
    assert poly_add(P((1.0, 0.0, 1.0)), P((0.0, 2.0))) == P((1.0, 2.0, 1.0))


def test_mul_hand_expansion():
    assert poly_mul(P((1.0, 1.0)), P((2.0, 1.0))) == P((2.0, 3.0, 1.0))


def test_mul_identity_and_annihilator():
    p = P((1.0, -2.0, 3.0))
    assert poly_mul(p, P.one()) == p
    assert poly_mul(p, P.zero()) == P.zero()


def test_eval_at_root_and_complex_point():
    assert poly_eval(P((2.0, 1.0)), -2.0) == 0.0
    assert poly_eval(P((2.0, 3.0, 1.0)), 1j) == 1 + 3j
    assert poly_eval(P((5.0,)), 123.456) == 5.0
    assert poly_eval(P((5.0,)), 2j) == 5.0


def test_trim_and_degree():
    assert P((1.0, 2.0, 0.0, 0.0)).coeffs == (1.0, 2.0)
    assert P((0.0, 0.0)).is_zero
    assert P.zero().degree == -1
    assert P((1.0, 2.0)).degree == 1


def test_roots_linear():
    rs = poly_roots(P((2.0, 1.0)))
    assert rs.roots == ((-2 + 0j, 1),)


def test_roots_two_simple_with_eval_crosscheck():
    p = P((2.0, 3.0, 1.0))
    rs = poly_roots(p)
    match_rootsets(rs, [(-1 + 0j, 1), (-2 + 0j, 1)], tol_simple=1e-8)
    for z, _ in rs:
        assert abs(poly_eval(p, z)) <= 1e-12


def test_roots_double_via_roundtrip_oracle():
    # (s+1)^2; the oracle reconstructs the coefficients from the root set
    p = P((1.0, 2.0, 1.0))
    rs = poly_roots(p)
    assert [(round(z.real, 6), m) for z, m in rs] == [(-1.0, 2)]
    back = roots_to_poly(rs, 1.0)
    assert np.allclose(back.coeffs, p.coeffs, atol=1e-8)


def test_roots_at_origin_factored_exactly():
    # s^2 (s + 3): exact zero constant terms come off before iterating
    p = P((0.0, 0.0, 3.0, 1.0))
    rs = poly_roots(p)
    assert (0j, 2) in rs.roots
    assert any(abs(z + 3) < 1e-9 and m == 1 for z, m in rs)


def test_roots_errors():
    with pytest.raises(ZeroPolynomialError):
        poly_roots(P.zero())
    with pytest.raises(DegreeZeroError):
        poly_roots(P((4.0,)))


def test_roots_to_poly_hand_cases():
    assert roots_to_poly([(-1 + 0j, 1), (-2 + 0j, 1)], 1.0) == P((2.0, 3.0, 1.0))
    assert roots_to_poly([], 5.0) == P((5.0,))
    got = roots_to_poly([(-1 + 1j, 1), (-1 - 1j, 1)], 1.0)
    assert np.allclose(got.coeffs, (2.0, 2.0, 1.0))


def test_roots_to_poly_rejects_unpaired_complex():
    with pytest.raises(NonConjugateRootsError):
        roots_to_poly([(1 + 1j, 1)], 1.0)
    with pytest.raises(NonConjugateRootsError):
        roots_to_poly([(1 + 1j, 2), (1 - 1j, 1)], 1.0)


coeff_lists = st.lists(
    st.floats(min_value=-10, max_value=10, allow_nan=False).filter(
        lambda x: x == 0.0 or abs(x) >= 1e-3
    ),
    min_size=1,
    max_size=8,
)


@given(coeff_lists, coeff_lists)
def test_add_commutative_bitwise(a, b):
    p, q = P(tuple(a)), P(tuple(b))
    assert (p + q).coeffs == (q + p).coeffs


@given(coeff_lists, coeff_lists, coeff_lists)
def test_add_associative(a, b, c):
    p, q, r = P(tuple(a)), P(tuple(b)), P(tuple(c))
    left = (p + q) + r
    right = p + (q + r)
    n = max(len(left.coeffs), len(right.coeffs))
    lc = left.coeffs + (0.0,) * (n - len(left.coeffs))
    rc = right.coeffs + (0.0,) * (n - len(right.coeffs))
    scale = max(1.0, max(abs(v) for v in lc + rc))
    assert max(abs(x - y) for x, y in zip(lc, rc)) <= 1e-12 * scale


@given(coeff_lists, coeff_lists)
def test_mul_degree_law(a, b):
    p, q = P(tuple(a)), P(tuple(b))
    if p.is_zero or q.is_zero:
        assert (p * q).is_zero
    else:
        assert (p * q).degree == p.degree + q.degree


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_roundtrip_random_rootsets(seed):
    rng = np.random.default_rng(seed)
    roots = draw_rootset(rng, max_groups=3, max_mult=3, disk=10.0, min_sep=0.5)
    if not roots:
        return
    leading = float(rng.uniform(0.5, 2.0) * rng.choice([-1.0, 1.0]))
    p = roots_to_poly(roots, leading)
    # tol=1e-5 re-merges the root finder's spread around multiple roots while
    # staying far below the 0.5 separation of distinct roots
    rs = poly_roots(p, tol=1e-5)
    assert rs.total_multiplicity == p.degree
    match_rootsets(rs, roots)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_eval_small_at_reported_simple_roots(seed):
    rng = np.random.default_rng(seed)
    roots = draw_rootset(rng, max_groups=4, max_mult=1, disk=10.0, min_sep=0.5)
    if not roots:
        return
    p = roots_to_poly(roots, 1.0)
    norm = math.sqrt(sum(c * c for c in p.coeffs))
    for z, m in poly_roots(p):
        if m == 1:
            assert abs(poly_eval(p, z)) <= 1e-8 * norm


def test_conjugate_pairing_is_exact():
    p = roots_to_poly([(-0.5 + 2j, 1), (-0.5 - 2j, 1), (-3 + 0j, 1)], 1.0)
    rs = poly_roots(p)
    complex_roots = [z for z, _ in rs if z.imag != 0]
    assert len(complex_roots) == 2
    assert complex_roots[0] == complex_roots[1].conjugate()

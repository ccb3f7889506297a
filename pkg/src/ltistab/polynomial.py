"""Real-coefficient polynomials in s and robust root finding.

Coefficients are stored ascending (``coeffs[k]`` multiplies ``s**k``) so that
Horner evaluation and canonical trimming are uniform.  Root finding uses the
Aberth-Ehrlich simultaneous iteration (see :mod:`ltistab._kernels`) followed
by multiplicity detection via relative-radius clustering and enforced
conjugate pairing.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence, Union

from ltistab import _kernels
from ltistab.errors import (
    DegreeZeroError,
    NonConjugateRootsError,
    ZeroPolynomialError,
)

DEFAULT_ROOT_TOL = 1e-7

Scalar = Union[int, float]


@dataclass(frozen=True)
class Polynomial:
    """Real polynomial in canonical trimmed form.

    The zero polynomial is stored as ``(0.0,)``; every other polynomial has a
    nonzero leading (highest-power) coefficient.
    """

    coeffs: tuple[float, ...] = (0.0,)

    def __post_init__(self):
        cs = [float(c) for c in self.coeffs]
        while len(cs) > 1 and cs[-1] == 0.0:
            cs.pop()
        if not cs:
            cs = [0.0]
        object.__setattr__(self, "coeffs", tuple(cs))

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls((0.0,))

    @classmethod
    def one(cls) -> "Polynomial":
        return cls((1.0,))

    @classmethod
    def constant(cls, c: Scalar) -> "Polynomial":
        return cls((float(c),))

    @classmethod
    def s(cls) -> "Polynomial":
        """The monomial s."""
        return cls((0.0, 1.0))

    # -- structure ----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.coeffs == (0.0,)

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return -1 if self.is_zero else len(self.coeffs) - 1

    @property
    def leading(self) -> float:
        return self.coeffs[-1]

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(tuple(out))

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: Union["Polynomial", Scalar]) -> "Polynomial":
        if isinstance(other, (int, float)):
            return Polynomial(tuple(c * other for c in self.coeffs))
        if self.is_zero or other.is_zero:
            return Polynomial.zero()
        out = [0.0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0.0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Polynomial.one()
        for _ in range(n):
            result = result * self
        return result

    def __call__(self, s):
        return poly_eval(self, s)

    def derivative(self) -> "Polynomial":
        if self.degree < 1:
            return Polynomial.zero()
        return Polynomial(tuple((k + 1) * c for k, c in enumerate(self.coeffs[1:])))

    def scaled(self, factor: float) -> "Polynomial":
        return Polynomial(tuple(c * factor for c in self.coeffs))


@dataclass(frozen=True)
class RootSet:
    """Roots with multiplicities, sorted by (real, imaginary) part.

    The sum of multiplicities equals the degree of the source polynomial, and
    complex roots occur in exact conjugate pairs (pairing is enforced after
    clustering).
    """

    roots: tuple[tuple[complex, int], ...] = field(default=())

    def __post_init__(self):
        normalized = tuple(
            (complex(z), int(m)) for z, m in sorted(self.roots, key=_root_key)
        )
        object.__setattr__(self, "roots", normalized)

    def __len__(self) -> int:
        return len(self.roots)

    def __iter__(self) -> Iterator[tuple[complex, int]]:
        return iter(self.roots)

    @property
    def total_multiplicity(self) -> int:
        return sum(m for _, m in self.roots)

    def locations(self) -> tuple[complex, ...]:
        return tuple(z for z, _ in self.roots)

    def expanded(self) -> tuple[complex, ...]:
        """Roots repeated according to multiplicity."""
        out: list[complex] = []
        for z, m in self.roots:
            out.extend([z] * m)
        return tuple(out)

    def max_real(self) -> float:
        if not self.roots:
            return float("-inf")
        return max(z.real for z, _ in self.roots)


def _root_key(item: tuple[complex, int]):
    z = item[0]
    return (z.real, z.imag)


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------

def poly_add(p: Polynomial, q: Polynomial) -> Polynomial:
    """Coefficient-wise sum, re-trimmed to canonical form."""
    return p + q


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    """Product via convolution of coefficient sequences."""
    return p * q


def poly_eval(p: Polynomial, s):
    """Value of p at s by Horner's scheme (stable nested multiplication).

    Accepts real or complex s and returns the matching type.
    """
    acc = p.coeffs[-1]
    for c in p.coeffs[-2::-1]:
        acc = acc * s + c
    return acc


def poly_roots(p: Polynomial, tol: float = DEFAULT_ROOT_TOL) -> RootSet:
    """All complex roots of p with multiplicities.

    Raw roots within radius ``tol * max(1, |root|)`` of each other are merged
    into a single root at their centroid with summed multiplicity; conjugate
    symmetry is then enforced by pairing.  Exact roots at the origin are
    factored out beforehand, so the iteration always sees a nonzero constant
    term.
    """
    if p.is_zero:
        raise ZeroPolynomialError("the zero polynomial has no well-defined roots")
    if p.degree == 0:
        raise DegreeZeroError("a nonzero constant polynomial has no roots")
    if tol <= 0:
        raise ValueError("tol must be positive")

    coeffs = list(p.coeffs)
    origin_mult = 0
    while coeffs[0] == 0.0:
        coeffs.pop(0)
        origin_mult += 1

    raw: list[complex] = []
    if len(coeffs) >= 2:
        raw = _kernels.aberth_roots(coeffs)

    clusters = _cluster(raw, tol)
    clusters = [_refine_multiple(p, z, m, tol) for z, m in clusters]
    if origin_mult:
        clusters.append((0.0 + 0.0j, origin_mult))
    paired = _pair_conjugates(clusters, tol)
    return RootSet(tuple(paired))


def _refine_multiple(p: Polynomial, center: complex, m: int, tol: float) -> tuple[complex, int]:
    """Polish a multiplicity-m cluster centroid on the (m-1)-th derivative.

    A root of multiplicity m is a simple root of p^(m-1), where Newton
    converges quadratically instead of stalling on the flat cluster.  The
    polished point is kept only if it stays inside the merge radius, so a
    deliberately loose clustering tolerance cannot be dragged off course.
    """
    if m < 2:
        return center, m
    q = p
    for _ in range(m - 1):
        q = q.derivative()
    dq = q.derivative()
    z = center
    for _ in range(6):
        dv = poly_eval(dq, z)
        if dv == 0:
            break
        step = poly_eval(q, z) / dv
        z -= step
        if abs(step) <= 1e-15 * (1.0 + abs(z)):
            break
    if abs(z - center) <= tol * max(1.0, abs(center)):
        return z, m
    return center, m


def roots_to_poly(
    roots: Union[RootSet, Iterable[tuple[complex, int]], Sequence[complex]],
    leading: float = 1.0,
) -> Polynomial:
    """Expand ``leading * prod (s - z)**m`` back into a real polynomial.

    The root set must be conjugate-closed.  The expansion runs in complex
    arithmetic; the imaginary residue is discarded when below 1e-10 relative
    to the coefficient scale (an absolute threshold would be meaningless for
    large coefficients) and :class:`NonConjugateRootsError` is raised
    otherwise.
    """
    pairs = _as_pairs(roots)
    _check_conjugate_closed(pairs)

    acc = [complex(leading)]
    for z, m in pairs:
        for _ in range(m):
            acc = _mul_linear(acc, z)

    scale = max(1.0, max(abs(c) for c in acc))
    worst = max(abs(c.imag) for c in acc)
    if worst > 1e-10 * scale:
        raise NonConjugateRootsError(
            f"imaginary residue {worst:.3e} exceeds 1e-10 relative to scale {scale:.3e}"
        )
    return Polynomial(tuple(c.real for c in acc))


def _mul_linear(acc: list[complex], z: complex) -> list[complex]:
    """Multiply an ascending complex coefficient list by (s - z)."""
    out = [0j] * (len(acc) + 1)
    for i, c in enumerate(acc):
        out[i] += c * (-z)
        out[i + 1] += c
    return out


def _as_pairs(roots) -> list[tuple[complex, int]]:
    if isinstance(roots, RootSet):
        return [(z, m) for z, m in roots]
    pairs: list[tuple[complex, int]] = []
    for item in roots:
        if isinstance(item, tuple) and len(item) == 2 and isinstance(item[1], int):
            pairs.append((complex(item[0]), item[1]))
        else:
            pairs.append((complex(item), 1))
    return pairs


def _check_conjugate_closed(pairs: list[tuple[complex, int]]) -> None:
    unmatched = [(z, m) for z, m in pairs if z.imag != 0.0]
    used = [False] * len(unmatched)
    for i, (z, m) in enumerate(unmatched):
        if used[i]:
            continue
        target = z.conjugate()
        tol = 1e-8 * max(1.0, abs(z))
        for j in range(i + 1, len(unmatched)):
            w, mw = unmatched[j]
            if not used[j] and mw == m and abs(w - target) <= tol:
                used[i] = used[j] = True
                break
        else:
            raise NonConjugateRootsError(
                f"root {z} (multiplicity {m}) has no conjugate partner"
            )


def _cluster(raw: list[complex], tol: float) -> list[tuple[complex, int]]:
    """Greedy centroid clustering with radius tol * max(1, |centroid|)."""
    clusters: list[list] = []  # [centroid, count]
    for z in sorted(raw, key=lambda c: (c.real, c.imag)):
        for cl in clusters:
            if abs(z - cl[0]) <= tol * max(1.0, abs(cl[0])):
                cl[0] = (cl[0] * cl[1] + z) / (cl[1] + 1)
                cl[1] += 1
                break
        else:
            clusters.append([z, 1])
    return [(c, n) for c, n in clusters]


def _pair_conjugates(
    clusters: list[tuple[complex, int]], tol: float
) -> list[tuple[complex, int]]:
    """Snap near-real roots to the axis and mirror complex pairs exactly."""
    real_out: list[tuple[complex, int]] = []
    pos: list[tuple[complex, int]] = []
    neg: list[tuple[complex, int]] = []
    for z, m in clusters:
        if abs(z.imag) <= tol * max(1.0, abs(z)):
            real_out.append((complex(z.real, 0.0), m))
        elif z.imag > 0:
            pos.append((z, m))
        else:
            neg.append((z, m))

    out = list(real_out)
    neg_left = list(neg)
    for z, m in sorted(pos, key=lambda it: (it[0].real, it[0].imag)):
        if neg_left:
            j = min(
                range(len(neg_left)),
                key=lambda k: abs(neg_left[k][0].conjugate() - z),
            )
            w, mw = neg_left.pop(j)
            center = (z + w.conjugate()) / 2.0
            out.append((center, m))
            out.append((center.conjugate(), mw))
        else:
            out.append((z, m))  # numerically asymmetric leftover; keep as-is
    out.extend(neg_left)
    return out

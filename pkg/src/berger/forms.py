"""Invariant alternating forms on the 7-dimensional tangent space, the
first Pontryagin form of the canonical connection, its invariant primitive,
and the secondary characteristic integral.

An ``AltForm`` of degree k stores coefficients with respect to the dual
orthonormal basis e^1, ..., e^7: a map from ascending 0-based index tuples
to ``PiScalar`` values.  The two distinguished invariant forms are the
associative 3-form and its complementary 4-form built from the octonion
triple cycle (i, i+1, i+3):  both have integer coefficients, and their wedge
is 7 times the volume form.

The exterior differential of an invariant form reduces to a sum over
brackets; its global sign is configurable (``d_sign``) because both sign
conventions appear in the literature.  The shipped default ``d_sign=+1``
is pinned by the end-to-end value of the secondary integral, -49/50000.
"""
from __future__ import annotations

from fractions import Fraction as F
from functools import lru_cache
from itertools import combinations
from typing import Mapping, Sequence

from . import liealg
from .matrix import SqrtMatrix
from .scalar import PiScalar, SqrtField

#: shipped sign convention of the invariant exterior differential
DEFAULT_D_SIGN = 1

N = 7  # dimension of the tangent space


def _coerce_scalar(c) -> PiScalar:
    if isinstance(c, PiScalar):
        return c
    return PiScalar.of(c)


def _sort_with_sign(indices: Sequence[int]) -> tuple[tuple[int, ...], int]:
    """Ascending tuple and permutation sign; repeated index gives sign 0."""
    idx = list(indices)
    sign = 1
    # insertion sort, counting transpositions
    for i in range(1, len(idx)):
        j = i
        while j > 0 and idx[j - 1] > idx[j]:
            idx[j - 1], idx[j] = idx[j], idx[j - 1]
            sign = -sign
            j -= 1
    for a, b in zip(idx, idx[1:]):
        if a == b:
            return tuple(idx), 0
    return tuple(idx), sign


class AltForm:
    """Alternating k-form with exact PiScalar coefficients."""

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree: int, coeffs: Mapping[tuple[int, ...], object] | None = None):
        assert 0 <= degree <= N
        clean: dict[tuple[int, ...], PiScalar] = {}
        if coeffs:
            for key, c in coeffs.items():
                key = tuple(key)
                assert len(key) == degree and all(0 <= i < N for i in key)
                assert all(a < b for a, b in zip(key, key[1:])), f"key {key} not ascending"
                c = _coerce_scalar(c)
                if not c.is_zero():
                    clean[key] = c
        self.degree = degree
        self.coeffs = clean

    # -- evaluation -------------------------------------------------------

    def evaluate(self, indices: Sequence[int]) -> PiScalar:
        """Value on the basis vectors with the given (0-based) indices."""
        assert len(indices) == self.degree
        key, sign = _sort_with_sign(indices)
        if sign == 0:
            return PiScalar()
        c = self.coeffs.get(key)
        if c is None:
            return PiScalar()
        return c if sign == 1 else -c

    # -- linear structure ---------------------------------------------------

    def __add__(self, other: "AltForm") -> "AltForm":
        assert self.degree == other.degree
        c = dict(self.coeffs)
        for k, v in other.coeffs.items():
            c[k] = c.get(k, PiScalar()) + v
        return AltForm(self.degree, c)

    def __neg__(self) -> "AltForm":
        return AltForm(self.degree, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other: "AltForm") -> "AltForm":
        return self + (-other)

    def scale(self, c) -> "AltForm":
        c = _coerce_scalar(c)
        return AltForm(self.degree, {k: v * c for k, v in self.coeffs.items()})

    def wedge(self, other: "AltForm") -> "AltForm":
        deg = self.degree + other.degree
        assert deg <= N
        acc: dict[tuple[int, ...], PiScalar] = {}
        for ka, va in self.coeffs.items():
            sa = set(ka)
            for kb, vb in other.coeffs.items():
                if sa & set(kb):
                    continue
                key, sign = _sort_with_sign(ka + kb)
                term = va * vb
                if sign == -1:
                    term = -term
                acc[key] = acc.get(key, PiScalar()) + term
        return AltForm(deg, acc)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AltForm):
            return NotImplemented
        return self.degree == other.degree and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.degree, frozenset(self.coeffs.items())))

    def proportionality(self, other: "AltForm") -> PiScalar | None:
        """The scalar c with self = c * other, or None if there is none."""
        if self.degree != other.degree:
            return None
        if other.is_zero():
            return PiScalar() if self.is_zero() else None
        key, base = next(iter(other.coeffs.items()))
        mine = self.coeffs.get(key)
        if mine is None:
            return None
        c = _pi_divide(mine, base)
        if c is None:
            return None
        return c if self == other.scale(c) else None

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for key in sorted(self.coeffs):
            c = str(self.coeffs[key])
            mono = "^".join(f"e{i + 1}" for i in key)
            parts.append(f"({c}) {mono}" if any(ch in c for ch in "+- ") else f"{c} {mono}")
        return "  +  ".join(parts)

    def __repr__(self) -> str:
        return f"AltForm({self.degree}: {self})"


def _pi_divide(a: PiScalar, b: PiScalar) -> PiScalar | None:
    """a / b when b is concentrated in a single pi-degree."""
    degs = b.pi_degrees()
    if len(degs) != 1:
        return None
    k = degs[0]
    inv = b.coefficient(k).inverse()
    return a * PiScalar.of(inv, -k)


# -- the distinguished invariant forms --------------------------------------


@lru_cache(maxsize=None)
def g2_three_form() -> AltForm:
    """sum_i e^i ^ e^{i+1} ^ e^{i+3} over the seven octonion triples."""
    acc: dict[tuple[int, ...], PiScalar] = {}
    for i in range(7):
        key, sign = _sort_with_sign((i, (i + 1) % 7, (i + 3) % 7))
        acc[key] = acc.get(key, PiScalar()) + PiScalar.of(sign)
    return AltForm(3, acc)


@lru_cache(maxsize=None)
def g2_four_form() -> AltForm:
    """sum_i e^i ^ e^{i+1} ^ e^{i+2} ^ e^{i+5}; complementary to the 3-form."""
    acc: dict[tuple[int, ...], PiScalar] = {}
    for i in range(7):
        key, sign = _sort_with_sign((i, (i + 1) % 7, (i + 2) % 7, (i + 5) % 7))
        acc[key] = acc.get(key, PiScalar()) + PiScalar.of(sign)
    return AltForm(4, acc)


def volume_form() -> AltForm:
    return AltForm(7, {tuple(range(7)): PiScalar.of(1)})


# -- curvature and the Pontryagin form ---------------------------------------


@lru_cache(maxsize=None)
def curvature(i: int, j: int) -> SqrtMatrix:
    """Curvature operator of the canonical connection on basis vectors:
    R(e_i, e_j) = -isotropy action of the h-component of [e_i, e_j]."""
    es = liealg.p_basis()
    hpart = liealg.project_h(liealg.bracket(es[i], es[j]))
    return -liealg.isotropy_matrix(liealg.h_vector(hpart))


@lru_cache(maxsize=None)
def pontryagin_form() -> AltForm:
    """First Pontryagin form of the canonical connection, as an invariant
    4-form; normalized with the -1/(8 pi^2) convention on tr(R^2)."""
    acc: dict[tuple[int, ...], PiScalar] = {}
    for key in combinations(range(7), 4):
        a, b, c, d = key
        val = ((curvature(a, b) @ curvature(c, d)).trace()
               - (curvature(a, c) @ curvature(b, d)).trace()
               + (curvature(a, d) @ curvature(b, c)).trace())
        if not val.is_zero():
            acc[key] = PiScalar.of(val * F(-1, 4), -2)
    return AltForm(4, acc)


# -- invariant exterior differential ------------------------------------------


def invariant_d(form: AltForm, d_sign: int = DEFAULT_D_SIGN) -> AltForm:
    """Exterior differential of an invariant form on the quotient:
    (da)(v_0..v_k) = s * sum_{i<j} (-1)^{i+j} a([v_i, v_j]_p, ..rest..)."""
    assert d_sign in (1, -1)
    k = form.degree
    if k >= N:
        return AltForm(min(k + 1, N))
    c = liealg.structure_constants()
    acc: dict[tuple[int, ...], PiScalar] = {}
    for key in combinations(range(7), k + 1):
        total = PiScalar()
        for i in range(k + 1):
            for j in range(i + 1, k + 1):
                rest = key[:i] + key[i + 1:j] + key[j + 1:]
                sgn = (-1) ** (i + j)
                for m in range(7):
                    cm = c[key[i]][key[j]][m]
                    if cm.is_zero():
                        continue
                    v = form.evaluate((m,) + rest)
                    if v.is_zero():
                        continue
                    term = v * cm
                    total = total + (term if sgn == 1 else -term)
        if d_sign == -1:
            total = -total
        if not total.is_zero():
            acc[key] = total
    return AltForm(k + 1, acc)


def solve_primitive(p: AltForm, d_sign: int = DEFAULT_D_SIGN) -> AltForm:
    """Invariant primitive h of a 4-form proportional to the invariant
    4-form: h is the multiple of the invariant 3-form with d h = p."""
    assert p.degree == 4
    lam3 = g2_three_form()
    dlam3 = invariant_d(lam3, d_sign)
    ratio = p.proportionality(dlam3)
    if ratio is None:
        raise ValueError("form is not in the image of the invariant differential "
                         "on the line of invariant 3-forms")
    h = lam3.scale(ratio)
    assert invariant_d(h, d_sign) == p
    return h


# -- H-invariance --------------------------------------------------------------


def is_h_invariant(form: AltForm) -> bool:
    """True when the form is annihilated by every isotropy generator."""
    k = form.degree
    for m in range(3):
        iso = liealg.isotropy_generator(m)
        for key in combinations(range(7), k):
            total = PiScalar()
            for slot in range(k):
                for rep in range(7):
                    c = iso[(rep, key[slot])]
                    if c.is_zero():
                        continue
                    v = form.evaluate(key[:slot] + (rep,) + key[slot + 1:])
                    if not v.is_zero():
                        total = total + v * c
            if not total.is_zero():
                return False
    return True


# -- volumes and integration ---------------------------------------------------


def vol_so3() -> PiScalar:
    """Volume of SO(3) with the bi-invariant metric from <A,B> = -tr(AB)/2."""
    return PiScalar.of(8, 2)


def vol_so5() -> PiScalar:
    """Volume of SO(5) with the same normalization."""
    return PiScalar.of(F(128, 3), 6)


def vol_h() -> PiScalar:
    """Volume of the embedded so(3) subgroup: the irreducible embedding
    scales lengths by sqrt5, so this is 5^(3/2) times vol(SO(3))."""
    return vol_so3() * PiScalar.of(SqrtField.term(5, 5))


def vol_m() -> PiScalar:
    """Volume of the quotient: vol(SO(5)) / vol(H)."""
    v = _pi_divide(vol_so5(), vol_h())
    assert v is not None
    return v


def integrate_invariant(form: AltForm) -> PiScalar:
    """Integral over the quotient of an invariant 7-form: its coefficient
    against the volume form times the total volume."""
    assert form.degree == 7
    coeff = form.coeffs.get(tuple(range(7)), PiScalar())
    return coeff * vol_m()


def secondary_integral(d_sign: int = DEFAULT_D_SIGN) -> F:
    """-1/(2^7 * 7) times the integral of p1 ^ h, as an exact rational."""
    p1 = pontryagin_form()
    h = solve_primitive(p1, d_sign)
    total = integrate_invariant(p1.wedge(h))
    return (total * PiScalar.of(F(-1, 128 * 7))).as_rational()

"""Cayley octonions, Clifford multiplication on them, and the exact
spectrum of the deformation part of the odd signature operator family.

The octonion product is generated by the seven index triples
(i, i+1, i+3) mod 7: within each triple the product of two consecutive
units is the third.  The spinor module of Spin(7) is identified with the
octonions so that Clifford multiplication by a tangent vector v becomes
right Cayley multiplication s -> s * v; the volume element c_1 ... c_7
then acts as +1, which pins the orientation.

The deformation operator lives on the 64-dimensional space O (x) O
(basis e_a (x) e_b -> index 8a + b) and is assembled from the spinor
lifts of the tangential bracket operators.  Its exact eigenvalues are
7/sqrt5, +-1/sqrt5 and +-sqrt5, certified here by an exact minimal
polynomial identity and by the restriction to explicit isotypic blocks.
"""
from __future__ import annotations

from fractions import Fraction as F
from functools import lru_cache
from typing import Sequence

from . import liealg, roots
from .matrix import SqrtMatrix
from .scalar import SqrtField

#: the seven multiplication triples (1-based imaginary unit indices)
TRIPLES = tuple((i, i % 7 + 1, (i + 2) % 7 + 1) for i in range(1, 8))


@lru_cache(maxsize=None)
def _product_table() -> dict[tuple[int, int], tuple[int, int]]:
    """(i, j) -> (k, sign) with e_i * e_j = sign * e_k; k = 0 is the real
    unit (the case i = j)."""
    table = {}
    for a, b, c in TRIPLES:
        for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
            table[(x, y)] = (z, 1)
            table[(y, x)] = (z, -1)
    for i in range(1, 8):
        table[(i, i)] = (0, -1)
    return table


def _sf(x) -> SqrtField:
    if isinstance(x, SqrtField):
        return x
    return SqrtField.rational(F(x))


class Octonion:
    """Element of the Cayley algebra, 8 exact coordinates (e_0 = 1)."""

    __slots__ = ("coords",)

    def __init__(self, coords: Sequence):
        coords = tuple(_sf(c) for c in coords)
        assert len(coords) == 8
        self.coords = coords

    @classmethod
    def unit(cls, i: int) -> "Octonion":
        assert 0 <= i <= 7
        return cls([1 if k == i else 0 for k in range(8)])

    @classmethod
    def imaginary(cls, coords: Sequence) -> "Octonion":
        coords = list(coords)
        assert len(coords) == 7
        return cls([0] + coords)

    def __add__(self, other: "Octonion") -> "Octonion":
        return Octonion([a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other: "Octonion") -> "Octonion":
        return Octonion([a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self) -> "Octonion":
        return Octonion([-a for a in self.coords])

    def scale(self, c) -> "Octonion":
        return Octonion([a * c for a in self.coords])

    def __mul__(self, other: "Octonion") -> "Octonion":
        a, b = self.coords, other.coords
        out = [a[0] * b[k] + a[k] * b[0] for k in range(8)]
        out[0] = a[0] * b[0]
        table = _product_table()
        for i in range(1, 8):
            ai = a[i]
            if ai.is_zero():
                continue
            for j in range(1, 8):
                bj = b[j]
                if bj.is_zero():
                    continue
                k, s = table[(i, j)]
                term = ai * bj
                out[k] = out[k] + (term if s == 1 else -term)
        return Octonion(out)

    def conjugate(self) -> "Octonion":
        return Octonion([self.coords[0]] + [-c for c in self.coords[1:]])

    def real_part(self) -> SqrtField:
        return self.coords[0]

    def imaginary_coords(self) -> tuple[SqrtField, ...]:
        return self.coords[1:]

    def norm2(self) -> SqrtField:
        acc = SqrtField()
        for c in self.coords:
            if c:
                acc = acc + c * c
        return acc

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coords)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Octonion):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return "Octonion(" + ", ".join(str(c) for c in self.coords) + ")"


# -- Clifford action ----------------------------------------------------------


def clifford_right(coords: Sequence) -> SqrtMatrix:
    """Right Cayley multiplication s -> s * v as an 8x8 matrix, for the
    tangent vector v with the given 7 imaginary coordinates."""
    v = Octonion.imaginary(list(coords))
    cols = [(Octonion.unit(a) * v).coords for a in range(8)]
    return SqrtMatrix([[cols[a][i] for a in range(8)] for i in range(8)])


@lru_cache(maxsize=None)
def unit_cliffords() -> tuple[SqrtMatrix, ...]:
    """The seven operators of right multiplication by e_1, ..., e_7."""
    return tuple(clifford_right([1 if k == i else 0 for k in range(7)])
                 for i in range(7))


def clifford_volume() -> SqrtMatrix:
    """c_1 c_2 ... c_7 (rightmost factor applied first)."""
    cl = unit_cliffords()
    m = cl[0]
    for c in cl[1:]:
        m = m @ c
    return m


@lru_cache(maxsize=None)
def tangent_bracket_spinor(i: int) -> SqrtMatrix:
    """Spinor lift (1/4) sum_{j,k} <[g_i,e_j]_p, e_k> c_j c_k of the skew
    operator v -> [g_i, v]_p.  For the three indices beyond the tangent
    space this is the differential of the lifted isotropy representation."""
    assert 0 <= i <= 9
    c = liealg.structure_constants()[i]
    cl = unit_cliffords()
    acc = SqrtMatrix.zeros(8)
    for j in range(7):
        row = c[j]
        for k in range(7):
            coeff = row[k]
            if coeff.is_zero():
                continue
            acc = acc + (cl[j] @ cl[k]).scale(coeff * F(1, 4))
    return acc


# -- the deformation operator on O (x) O ---------------------------------------


@lru_cache(maxsize=None)
def deformation_operator() -> SqrtMatrix:
    """The deformation term of the odd signature operator family, on the
    64-dimensional space O (x) O: the sum over tangent directions of
    Clifford multiplication on the first factor composed with one third
    of the bracket lift there plus the bracket lift on the second factor."""
    eye = SqrtMatrix.identity(8)
    cl = unit_cliffords()
    total = SqrtMatrix.zeros(64)
    for i in range(7):
        a = tangent_bracket_spinor(i)
        total = total + (cl[i] @ a).scale(F(1, 3)).tensor(eye) + cl[i].tensor(a)
    return total


def tensor_unit(a: int, b: int) -> list[SqrtField]:
    """The basis 64-vector e_a (x) e_b."""
    v = [SqrtField() for _ in range(64)]
    v[8 * a + b] = SqrtField.rational(1)
    return v


def _inner64(u: Sequence[SqrtField], v: Sequence[SqrtField]) -> SqrtField:
    acc = SqrtField()
    for a, b in zip(u, v):
        if a and b:
            acc = acc + a * b
    return acc


def operator_block(vectors: Sequence[Sequence[SqrtField]]) -> SqrtMatrix:
    """Matrix of the deformation operator on the span of the given
    orthonormal vectors; asserts that the span is exactly invariant."""
    b0 = deformation_operator()
    images = [b0.apply(list(v)) for v in vectors]
    n = len(vectors)
    block = [[_inner64(vectors[a], images[b]) for b in range(n)]
             for a in range(n)]
    for b in range(n):
        residue = list(images[b])
        for a in range(n):
            coeff = block[a][b]
            if coeff.is_zero():
                continue
            residue = [r - coeff * x for r, x in zip(residue, vectors[a])]
        assert all(r.is_zero() for r in residue), "span is not invariant"
    return SqrtMatrix(block)


@lru_cache(maxsize=None)
def trivial_component_block() -> SqrtMatrix:
    """2x2 block on the span of 1 (x) 1 and (1/sqrt7) sum e_i (x) e_i."""
    u1 = tensor_unit(0, 0)
    u2 = [SqrtField() for _ in range(64)]
    c = SqrtField.term(F(1, 7), 7)
    for i in range(1, 8):
        u2[8 * i + i] = c
    return operator_block((u1, u2))


@lru_cache(maxsize=None)
def standard_component_block() -> SqrtMatrix:
    """3x3 block on the three embeddings of the 7-dimensional component,
    evaluated at e_1: the vectors e_1 (x) 1, 1 (x) e_1 and
    (1/sqrt6) sum_{i>=2} e_i (x) (e_1 * e_i)."""
    v1 = tensor_unit(1, 0)
    v2 = tensor_unit(0, 1)
    v3 = [SqrtField() for _ in range(64)]
    table = _product_table()
    c = SqrtField.term(F(1, 6), 6)
    for i in range(2, 8):
        k, s = table[(1, i)]
        v3[8 * i + k] = c if s == 1 else -c
    return operator_block((v1, v2, v3))


# -- sample vectors of the two remaining component types -----------------------


def cross_contraction(vec: Sequence[SqrtField]) -> list[SqrtField]:
    """Equivariant contraction of the imaginary (x) imaginary part of a
    64-vector down to 7 coordinates, x (x) y -> im(x * y)."""
    out = [SqrtField() for _ in range(7)]
    table = _product_table()
    for i in range(1, 8):
        for j in range(1, 8):
            if i == j:
                continue
            c = vec[8 * i + j]
            if c.is_zero():
                continue
            k, s = table[(i, j)]
            out[k - 1] = out[k - 1] + (c if s == 1 else -c)
    return out


def cross_insertion(z: Sequence[SqrtField]) -> list[SqrtField]:
    """Adjoint of cross_contraction; composing the two gives 6 times the
    identity on 7 coordinates."""
    out = [SqrtField() for _ in range(64)]
    table = _product_table()
    for i in range(1, 8):
        for j in range(1, 8):
            if i == j:
                continue
            k, s = table[(i, j)]
            c = z[k - 1]
            if c.is_zero():
                continue
            out[8 * i + j] = out[8 * i + j] + (c if s == 1 else -c)
    return out


def adjoint_sample_vector() -> list[SqrtField]:
    """A vector in the 14-dimensional component: an antisymmetric tensor
    with its 7-dimensional cross-product part projected away."""
    t = [SqrtField() for _ in range(64)]
    one = SqrtField.rational(1)
    t[8 * 1 + 2] = one
    t[8 * 2 + 1] = -one
    correction = cross_insertion(cross_contraction(t))
    return [a - c * F(1, 6) for a, c in zip(t, correction)]


def traceless_sample_vectors() -> tuple[list[SqrtField], list[SqrtField]]:
    """Two vectors in the 27-dimensional component: a symmetrized pair and
    a traceless diagonal difference."""
    one = SqrtField.rational(1)
    s = [SqrtField() for _ in range(64)]
    s[8 * 1 + 2] = one
    s[8 * 2 + 1] = one
    d = [SqrtField() for _ in range(64)]
    d[8 * 1 + 1] = one
    d[8 * 2 + 2] = -one
    return s, d


def action_scalar(vec: Sequence[SqrtField]) -> SqrtField:
    """The scalar by which the deformation operator acts on the line
    through vec; asserts exact proportionality."""
    image = deformation_operator().apply(list(vec))
    pivot = next(k for k, c in enumerate(vec) if not c.is_zero())
    lam = image[pivot] / vec[pivot]
    for a, b in zip(image, vec):
        assert a == b * lam
    return lam


# -- exact spectral certificates -----------------------------------------------


def spectrum() -> tuple[SqrtField, ...]:
    """The five eigenvalues of the deformation operator."""
    t = SqrtField.term
    return (t(F(7, 5), 5), t(F(-1, 5), 5), t(F(1, 5), 5), t(1, 5), t(-1, 5))


def minimal_polynomial_check() -> bool:
    """Exact check that the product of the five eigenvalue shifts of the
    deformation operator is the zero 64x64 matrix."""
    b0 = deformation_operator()
    eye = SqrtMatrix.identity(64)
    prod = None
    for lam in spectrum():
        shifted = b0 - eye.scale(lam)
        prod = shifted if prod is None else prod @ shifted
    return prod.is_zero()


def commutes_with_lifted_isotropy() -> bool:
    """The deformation operator commutes with the lifted isotropy action
    on both tensor factors (exact matrix identity)."""
    eye = SqrtMatrix.identity(8)
    b0 = deformation_operator()
    for i in (7, 8, 9):
        a = tangent_bracket_spinor(i)
        lifted = a.tensor(eye) + eye.tensor(a)
        if not (b0 @ lifted - lifted @ b0).is_zero():
            return False
    return True


# -- the operator family on the trivial component ------------------------------


@lru_cache(maxsize=None)
def _base_block() -> SqrtMatrix:
    # undeformed reductive operator on the trivial component,
    # (1/(2 sqrt5)) diag(7, -1)
    t = SqrtField.term
    z = SqrtField()
    return SqrtMatrix([[t(F(7, 10), 5), z], [z, t(F(-1, 10), 5)]])


def trivial_family_matrix(mu) -> SqrtMatrix:
    """The deformed odd signature operator family restricted to the
    trivial isotypic component: base point plus mu times the computed
    deformation block."""
    return _base_block() + trivial_component_block().scale(F(mu))


def casimir_eigenvalue(p: int, q: int, factor: str) -> F:
    """Square of the reductive operator on the isotypic block of the
    highest weight (p, q): the shifted-norm difference
    |gamma + rho_G|^2 - |lambda_H + rho_H|^2, where lambda_H is trivial
    for factor="real" and the 7-dimensional weight for factor="imaginary"."""
    if not (isinstance(p, int) and isinstance(q, int) and p >= q >= 0):
        raise ValueError(f"weight ({p}, {q}) is not dominant")
    if factor == "real":
        lam = roots.kappa_weight(0)
    elif factor == "imaginary":
        lam = roots.kappa_weight(3)
    else:
        raise ValueError(f"unknown factor {factor!r}")
    gamma = (F(p), F(q))
    up = roots.norm2(roots.add(gamma, roots.rho_g()))
    down = roots.norm2(roots.add(lam, roots.rho_h()))
    return up - down

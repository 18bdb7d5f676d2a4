"""The Lie algebra so(5), its irreducible so(3) subalgebra, and the
orthogonal splitting  so(5) = h (+) p  underlying the homogeneous space.

Conventions:

* ``so5(i, j)`` (1 <= i < j <= 5) is the skew matrix sending the j-th
  coordinate vector to the i-th and the i-th to minus the j-th; these 21
  matrices are orthonormal for the inner product <A, B> = -tr(A B)/2.
* ``h_basis()`` returns the orthonormal basis f1, f2, f3 of the subalgebra h,
  the image of so(3) under its unique 5-dimensional irreducible
  representation.
* ``p_basis()`` returns the orthonormal basis e1, ..., e7 of the orthogonal
  complement p, numbered so that the full bracket satisfies the cyclic rule
  [e_i, e_{i+1}] = (1/sqrt5) e_{i+3} (indices mod 7).

All indices in this module's public API are 0-based offsets into these bases.
"""
from __future__ import annotations

from fractions import Fraction as F
from functools import lru_cache

from .matrix import SqrtMatrix
from .scalar import SqrtField

_HALF = F(1, 2)


def so5(i: int, j: int) -> SqrtMatrix:
    """Skew basis matrix with +1 in row i, column j (1-based, i < j <= 5)."""
    assert 1 <= i < j <= 5
    m = SqrtMatrix.zeros(5)
    m.rows[i - 1][j - 1] = SqrtField.rational(1)
    m.rows[j - 1][i - 1] = SqrtField.rational(-1)
    return m


def inner(a: SqrtMatrix, b: SqrtMatrix) -> SqrtField:
    """<A, B> = -tr(A B)/2; makes the so5(i, j) orthonormal."""
    return -(a @ b).trace() * F(1, 2)


def bracket(a: SqrtMatrix, b: SqrtMatrix) -> SqrtMatrix:
    return a @ b - b @ a


def _sf(p, q=1, rad=1):
    return SqrtField.term(F(p, q), rad)


@lru_cache(maxsize=None)
def iota_images() -> tuple[SqrtMatrix, SqrtMatrix, SqrtMatrix]:
    """Images iota_12, iota_23, iota_13 of the standard so(3) generators
    under the irreducible embedding into so(5); pairwise orthogonal of
    squared norm 5."""
    s3 = SqrtField.sqrt(3)
    i12 = so5(1, 2).scale(2) + so5(3, 4)
    i23 = so5(2, 3) - so5(1, 4) + so5(4, 5).scale(s3)
    i13 = so5(1, 3) + so5(2, 4) + so5(3, 5).scale(s3)
    return i12, i23, i13


@lru_cache(maxsize=None)
def h_basis() -> tuple[SqrtMatrix, ...]:
    """Orthonormal basis f1 = iota_12/sqrt5, f2 = iota_23/sqrt5,
    f3 = iota_13/sqrt5 of h."""
    inv5 = _sf(1, 5, 5)  # 1/sqrt5
    i12, i23, i13 = iota_images()
    return (i12.scale(inv5), i23.scale(inv5), i13.scale(inv5))


@lru_cache(maxsize=None)
def p_basis() -> tuple[SqrtMatrix, ...]:
    """Orthonormal basis e1..e7 of p = orthogonal complement of h."""
    c15 = _sf(1, 5, 5)    # 1/sqrt5
    c25 = _sf(2, 5, 5)    # 2/sqrt5
    c10 = _sf(1, 5, 10)   # sqrt2/sqrt5
    c30 = _sf(1, 10, 30)  # sqrt3/sqrt10
    c2 = _sf(1, 2, 2)     # 1/sqrt2
    e1 = so5(1, 2).scale(c15) - so5(3, 4).scale(c25)
    e2 = so5(4, 5).scale(c10) - (so5(2, 3) - so5(1, 4)).scale(c30)
    e3 = so5(2, 5)
    e4 = so5(3, 5).scale(c10) - (so5(1, 3) + so5(2, 4)).scale(c30)
    e5 = (so5(2, 4) - so5(1, 3)).scale(c2)
    e6 = -(so5(2, 3) + so5(1, 4)).scale(c2)
    e7 = so5(1, 5)
    return (e1, e2, e3, e4, e5, e6, e7)


@lru_cache(maxsize=None)
def g_basis() -> tuple[SqrtMatrix, ...]:
    """Orthonormal basis of so(5): e1..e7 of p followed by f1..f3 of h."""
    return p_basis() + h_basis()


def project_p(a: SqrtMatrix) -> list[SqrtField]:
    """Coordinates of the p-component with respect to e1..e7."""
    return [inner(a, e) for e in p_basis()]


def project_h(a: SqrtMatrix) -> list[SqrtField]:
    """Coordinates of the h-component with respect to f1..f3."""
    return [inner(a, f) for f in h_basis()]


def p_vector(coords) -> SqrtMatrix:
    """Element of p with the given e-basis coordinates."""
    m = SqrtMatrix.zeros(5)
    for c, e in zip(coords, p_basis()):
        if not (isinstance(c, SqrtField) and c.is_zero()):
            m = m + e.scale(c)
    return m


def h_vector(coords) -> SqrtMatrix:
    """Element of h with the given f-basis coordinates."""
    m = SqrtMatrix.zeros(5)
    for c, f in zip(coords, h_basis()):
        if not (isinstance(c, SqrtField) and c.is_zero()):
            m = m + f.scale(c)
    return m


@lru_cache(maxsize=None)
def structure_constants() -> tuple:
    """c[i][j][k] = < [g_i, e_j]_p , e_k >  for the 10 basis elements g_i
    of so(5) (0..6 from p, 7..9 from h) against the p-basis."""
    basis = g_basis()
    es = p_basis()
    out = []
    for gi in basis:
        row = []
        for ej in es:
            br = bracket(gi, ej)
            row.append(tuple(inner(br, ek) for ek in es))
        out.append(tuple(row))
    return tuple(out)


def isotropy_matrix(f: SqrtMatrix) -> SqrtMatrix:
    """Matrix of v -> [f, v] on p in the e-basis, for f in h."""
    es = p_basis()
    cols = []
    for e in es:
        br = bracket(f, e)
        assert all(c.is_zero() for c in project_h(br)), "h does not preserve p"
        cols.append(project_p(br))
    return SqrtMatrix([[cols[j][i] for j in range(7)] for i in range(7)])


def isotropy_generator(m: int) -> SqrtMatrix:
    """Isotropy action of f_{m+1}, m in {0, 1, 2}."""
    return isotropy_matrix(h_basis()[m])


def two_form_alpha(m: int):
    """The invariant 2-form <f_{m+1}, [ . , . ]> on p, m in {0, 1, 2}."""
    from .forms import AltForm

    f = h_basis()[m]
    es = p_basis()
    coeffs = {}
    for i in range(7):
        for j in range(i + 1, 7):
            c = inner(f, bracket(es[i], es[j]))
            if not c.is_zero():
                coeffs[(i, j)] = c
    return AltForm(2, coeffs)


def check_jacobi(triples, bracket_fn=bracket):
    """Check the Jacobi identity on index triples into the so(5) basis.

    Returns None if every triple passes, else the first offending triple.
    The bracket function is injectable so that verification can demonstrate
    failure detection on corrupted inputs.
    """
    basis = g_basis()
    for (i, j, k) in triples:
        a, b, c = basis[i], basis[j], basis[k]
        total = (bracket_fn(a, bracket_fn(b, c))
                 + bracket_fn(b, bracket_fn(c, a))
                 + bracket_fn(c, bracket_fn(a, b)))
        if not total.is_zero():
            return (i, j, k)
    return None

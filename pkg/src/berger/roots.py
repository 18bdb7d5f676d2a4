"""Root data of so(5) and its distinguished weights.

A weight is a pair of rationals (a, b), the functional a e12* + b e34* on
the Cartan subalgebra t = span{e12, e34}; a Cartan vector is likewise a
pair (x, y) meaning x e12 + y e34.  The embedded so(3) meets t in the line
s spanned by iota_12 = 2 e12 + e34, so restriction of weights to s is the
orthogonal projection onto that line.

The distinguished direction E = (e12 - 2 e34)/sqrt5 spans the orthogonal
complement of s in t; it is stored unnormalized as (1, -2), which never
affects a sign or a window test.
"""
from __future__ import annotations

from fractions import Fraction as F
from functools import lru_cache

Pair = tuple[F, F]


def _pair(a, b) -> Pair:
    return (F(a), F(b))


def evaluate(w: Pair, x: Pair) -> F:
    """Value of the weight w on the Cartan vector x."""
    return w[0] * x[0] + w[1] * x[1]


def dot(a: Pair, b: Pair) -> F:
    return a[0] * b[0] + a[1] * b[1]


def norm2(a: Pair) -> F:
    return dot(a, a)


def add(a: Pair, b: Pair) -> Pair:
    return (a[0] + b[0], a[1] + b[1])


# -- fixed data ---------------------------------------------------------------


def positive_roots() -> tuple[Pair, ...]:
    return (_pair(1, 1), _pair(1, -1), _pair(1, 0), _pair(0, 1))


def rho_g() -> Pair:
    """Half sum of the positive roots, (3/2, 1/2)."""
    return (F(3, 2), F(1, 2))


def rho_h() -> Pair:
    """Half of iota_12* = (2 e12* + e34*)/5, as a functional on t."""
    return (F(1, 5), F(1, 10))


def delta() -> Pair:
    """The weight (1, -2): the annihilator of s, normal to the s-line."""
    return _pair(1, -2)


def cartan_e() -> Pair:
    """The direction E complementary to s in t, unnormalized: e12 - 2 e34."""
    return _pair(1, -2)


def kappa_weight(k: int) -> Pair:
    """Highest weight of the (2k+1)-dimensional representation of the
    embedded so(3), written as a functional on t via iota_12*."""
    assert k >= 0
    return (F(2 * k, 5), F(k, 5))


# -- Weyl group ---------------------------------------------------------------


class WeylElement:
    """Signed coordinate permutation of the plane."""

    __slots__ = ("swap", "signs")

    def __init__(self, swap: bool, signs: tuple[int, int]):
        assert signs[0] in (1, -1) and signs[1] in (1, -1)
        self.swap = swap
        self.signs = signs

    @property
    def sign(self) -> int:
        """Determinant of the element."""
        return self.signs[0] * self.signs[1] * (-1 if self.swap else 1)

    def apply(self, v: Pair) -> Pair:
        x, y = (v[1], v[0]) if self.swap else (v[0], v[1])
        return (self.signs[0] * x, self.signs[1] * y)

    def compose(self, other: "WeylElement") -> "WeylElement":
        """self after other."""
        s1, s2 = self.signs
        o1, o2 = (other.signs[1], other.signs[0]) if self.swap else other.signs
        return WeylElement(self.swap != other.swap, (s1 * o1, s2 * o2))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self.swap == other.swap and self.signs == other.signs

    def __hash__(self):
        return hash((self.swap, self.signs))

    def __repr__(self):
        return f"WeylElement(swap={self.swap}, signs={self.signs})"


@lru_cache(maxsize=None)
def weyl_group() -> tuple[WeylElement, ...]:
    """The eight signed permutations of two coordinates."""
    return tuple(WeylElement(swap, (s1, s2))
                 for swap in (False, True)
                 for s1 in (1, -1)
                 for s2 in (1, -1))


# -- restriction and the boundary weights ------------------------------------


def restrict_to_s(x: Pair) -> Pair:
    """Orthogonal projection of a Cartan vector onto the line through
    iota_12, whose t-coordinates are (2, 1)."""
    c = (2 * x[0] + x[1]) / 5
    return (2 * c, c)


def determine_alpha(k: int) -> Pair:
    """The unique spinorial weight (half-integer coordinates) restricting
    to kappa_k + rho_h on s and landing in the half-open fundamental
    window 0 <= alpha(E) < delta(E).

    The solutions of the restriction condition form the affine line
    base + t*delta with base = (1/2, k - 1/2); the window picks one t.
    """
    assert k in (0, 3)
    base = (F(1, 2), F(k) - F(1, 2))
    e = cartan_e()
    step = evaluate(delta(), e)
    t = -(evaluate(base, e) // step)
    alpha = (base[0] + t, base[1] - 2 * t)
    assert 0 <= evaluate(alpha, e) < step
    return alpha

"""Exact representation arithmetic for the three rank <= 2 groups in play.

Each root system is realized by explicit rational vectors:

* ``A1``  -- ambient Q^1 with root (1), so the irreducible of spin k
  (any half-integer) has highest weight (k) and weights k, k-1, ..., -k.
* ``B2``  -- ambient Q^2 with simple roots (1,-1), (0,1).  Irreducibles
  are labelled by their highest weight (p, q), p >= q >= 0 with p - q
  and 2q integral; (1,0) is the 5-dimensional standard module, (1,1)
  the adjoint, (1/2, 1/2) the 4-dimensional spin module.
* ``G2``  -- ambient Q^3 restricted to the plane x + y + z = 0, with
  short simple root (1,-1,0) and long simple root (-1,2,-1).  Labels
  (a, b) mean a copies of the long fundamental weight (the adjoint
  direction) plus b copies of the short one (the 7-dimensional
  direction), so (0,1) is 7-dimensional and (1,0) is 14-dimensional.

All weight bookkeeping is done with Fractions; dimensions, weight
multiplicities (Freudenthal), and tensor products (the alternating-sign
dominance walk) come out exact.  The two branchings used downstream --
the principal three-dimensional subgroup of G2 and the irreducible
SO(3) inside SO(5) -- both work the same way: push every weight through
a level functional that is 1 on each simple-root direction, then peel
spin strings greedily from the top.
"""
from collections import Counter
from fractions import Fraction as F
from functools import lru_cache
from typing import Callable, Sequence

Vector = tuple[F, ...]


def _vec(*coords) -> Vector:
    return tuple(F(c) for c in coords)


def _add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def _sub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def _scale(u: Vector, c) -> Vector:
    return tuple(a * c for a in u)


def _dot(u: Vector, v: Vector) -> F:
    return sum((a * b for a, b in zip(u, v)), F(0))


class RootSystem:
    """A realized root system plus label conventions for its irreducibles."""

    def __init__(self, name: str, simple: Sequence[Vector],
                 positive: Sequence[Vector],
                 to_ambient: Callable[..., Vector],
                 from_ambient: Callable[[Vector], object]):
        self.name = name
        self.simple = tuple(simple)
        self.positive = tuple(positive)
        self.rho = _scale(_add_all(positive), F(1, 2))
        self._to_ambient = to_ambient
        self._from_ambient = from_ambient

    # -- basic geometry --------------------------------------------------

    def coroot_pairing(self, v: Vector, root: Vector) -> F:
        return 2 * _dot(v, root) / _dot(root, root)

    def reflect(self, v: Vector, root: Vector) -> Vector:
        return _sub(v, _scale(root, self.coroot_pairing(v, root)))

    def cartan_matrix(self) -> list[list[int]]:
        out = []
        for a in self.simple:
            row = []
            for b in self.simple:
                p = self.coroot_pairing(b, a)
                assert p.denominator == 1
                row.append(int(p))
            out.append(row)
        return out

    def weyl_elements(self) -> list[tuple[Vector, ...]]:
        """The Weyl group as matrices (tuples of rows), by closure."""
        n = len(self.rho)
        basis = [tuple(F(int(i == j)) for j in range(n)) for i in range(n)]

        def act(m, v):
            return tuple(_dot(row, v) for row in m)

        def refl_matrix(root):
            return tuple(self.reflect(b, root) for b in basis)

        # rows here are images of basis vectors, i.e. the transpose; the
        # closure count is unaffected.
        gens = [refl_matrix(a) for a in self.simple]
        seen = {tuple(basis)}
        frontier = [tuple(basis)]
        while frontier:
            nxt = []
            for m in frontier:
                for g in gens:
                    composed = tuple(act(g, row) for row in m)
                    if composed not in seen:
                        seen.add(composed)
                        nxt.append(composed)
            frontier = nxt
        return sorted(seen)

    # -- labels ------------------------------------------------------------

    def highest_weight(self, label) -> Vector:
        """Ambient vector of a dominant label; rejects anything else."""
        v = self._to_ambient(label)
        for a in self.simple:
            p = self.coroot_pairing(v, a)
            if p < 0:
                raise ValueError(
                    "%s label %r is not dominant" % (self.name, label))
            if p.denominator != 1:
                raise ValueError(
                    "%s label %r is not an integral weight" % (self.name, label))
        return v

    def label_of(self, v: Vector):
        return self._from_ambient(v)

    def make_dominant(self, v: Vector) -> tuple[Vector, int, bool]:
        """Weyl-translate into the closed chamber.

        Returns (dominant image, sign of the element used, wall flag);
        the wall flag is True when the image has a zero pairing, i.e.
        the orbit meets a chamber wall and the sign is not well defined.
        """
        sign = 1
        while True:
            for a in self.simple:
                if self.coroot_pairing(v, a) < 0:
                    v = self.reflect(v, a)
                    sign = -sign
                    break
            else:
                wall = any(self.coroot_pairing(v, a) == 0 for a in self.simple)
                return v, sign, wall

    def orbit(self, v: Vector) -> set[Vector]:
        seen = {v}
        frontier = [v]
        while frontier:
            nxt = []
            for u in frontier:
                for a in self.simple:
                    r = self.reflect(u, a)
                    if r not in seen:
                        seen.add(r)
                        nxt.append(r)
            frontier = nxt
        return seen

    # -- representation data -----------------------------------------------

    def weyl_dimension(self, label) -> int:
        lam = self.highest_weight(label)
        num = den = F(1)
        for b in self.positive:
            num *= _dot(_add(lam, self.rho), b)
            den *= _dot(self.rho, b)
        d = num / den
        assert d.denominator == 1 and d > 0
        return int(d)

    def _root_coordinates(self, v: Vector) -> tuple[F, F] | tuple[F]:
        """Coordinates of v in the simple-root basis (exact)."""
        if len(self.simple) == 1:
            a = self.simple[0]
            return (_dot(v, a) / _dot(a, a),)
        a1, a2 = self.simple
        # solve c1*a1 + c2*a2 = v via the Gram matrix
        g11, g12, g22 = _dot(a1, a1), _dot(a1, a2), _dot(a2, a2)
        b1, b2 = _dot(v, a1), _dot(v, a2)
        det = g11 * g22 - g12 * g12
        c1 = (b1 * g22 - b2 * g12) / det
        c2 = (g11 * b2 - g12 * b1) / det
        return (c1, c2)

    def freudenthal(self, label) -> dict[Vector, int]:
        """Full weight multiset of the irreducible with this label."""
        return dict(self._freudenthal(self._canonical(label)))

    def _canonical(self, label):
        v = self.highest_weight(label)
        return v

    @lru_cache(maxsize=None)
    def _freudenthal(self, lam: Vector) -> tuple[tuple[Vector, int], ...]:
        rho = self.rho
        lam_rho = _add(lam, rho)
        bound = _dot(lam_rho, lam_rho)
        # every weight lies in lam - (nonnegative root cone), with root
        # coordinates bounded by those of lam - w0(lam) = 2 lam
        caps = [int(2 * c) for c in self._root_coordinates(lam)]
        dominants = []
        for counts in _boxes(caps):
            mu = lam
            for n, a in zip(counts, self.simple):
                mu = _sub(mu, _scale(a, n))
            if any(self.coroot_pairing(mu, a) < 0 for a in self.simple):
                continue
            mu_rho = _add(mu, rho)
            if _dot(mu_rho, mu_rho) > bound:
                continue
            dominants.append((sum(counts), mu))
        dominants.sort()  # increasing depth below the highest weight

        mult = {lam: 1}
        for depth, mu in dominants:
            if depth == 0:
                continue
            acc = F(0)
            for b in self.positive:
                k = 1
                while True:
                    nu = _add(mu, _scale(b, k))
                    nu_rho = _add(nu, rho)
                    if _dot(nu_rho, nu_rho) > bound:
                        break
                    dom, _, _ = self.make_dominant(nu)
                    m = mult.get(dom, 0)
                    if m:
                        acc += m * _dot(nu, b)
                    k += 1
            mu_rho = _add(mu, rho)
            denom = bound - _dot(mu_rho, mu_rho)
            m = 2 * acc / denom
            assert m.denominator == 1 and m >= 0
            if m:
                mult[mu] = int(m)

        full: dict[Vector, int] = {}
        for mu, m in mult.items():
            for v in self.orbit(mu):
                full[v] = m
        assert sum(full.values()) == self.weyl_dimension(self.label_of(lam))
        return tuple(sorted(full.items()))

    def klimyk_tensor(self, a, b) -> list[tuple[object, int]]:
        """Decompose the tensor product of two labelled irreducibles."""
        if self.weyl_dimension(a) > self.weyl_dimension(b):
            a, b = b, a
        nu = self.highest_weight(b)
        out: Counter = Counter()
        for mu, m in self._freudenthal(self._canonical(a)):
            xi = _add(_add(nu, self.rho), mu)
            dom, sign, wall = self.make_dominant(xi)
            if wall:
                continue
            out[_sub(dom, self.rho)] += sign * m
        result = []
        total = 0
        for v in sorted(out):
            m = out[v]
            assert m >= 0
            if m:
                label = self.label_of(v)
                result.append((label, m))
                total += m * self.weyl_dimension(label)
        assert total == self.weyl_dimension(a) * self.weyl_dimension(b)
        return result


def _add_all(vectors: Sequence[Vector]) -> Vector:
    total = vectors[0]
    for v in vectors[1:]:
        total = _add(total, v)
    return total


def _boxes(caps: Sequence[int]):
    if len(caps) == 1:
        for n in range(caps[0] + 1):
            yield (n,)
    else:
        for n in range(caps[0] + 1):
            for rest in _boxes(caps[1:]):
                yield (n,) + rest


# -- the three systems ----------------------------------------------------

A1 = RootSystem(
    "A1",
    simple=[_vec(1)],
    positive=[_vec(1)],
    to_ambient=lambda k: _vec(k),
    from_ambient=lambda v: v[0],
)

B2 = RootSystem(
    "B2",
    simple=[_vec(1, -1), _vec(0, 1)],
    positive=[_vec(1, -1), _vec(0, 1), _vec(1, 0), _vec(1, 1)],
    to_ambient=lambda pq: _vec(*pq),
    from_ambient=lambda v: v,
)

_G2_LONG_FW = _vec(1, 1, -2)
_G2_SHORT_FW = _vec(1, 0, -1)

G2 = RootSystem(
    "G2",
    simple=[_vec(1, -1, 0), _vec(-1, 2, -1)],
    positive=[_vec(1, -1, 0), _vec(-1, 2, -1), _vec(0, 1, -1),
              _vec(1, 0, -1), _vec(2, -1, -1), _vec(1, 1, -2)],
    to_ambient=lambda ab: _add(_scale(_G2_LONG_FW, F(ab[0])),
                               _scale(_G2_SHORT_FW, F(ab[1]))),
    from_ambient=lambda v: (v[1], v[0] - v[1]),
)

#: level functional of G2's principal three-dimensional subgroup:
#: value 1 on both simple roots, so the 7-dimensional module lands on
#: the string 3, 2, ..., -3.
PRINCIPAL_LEVEL = _vec(F(4, 3), F(1, 3), F(-5, 3))

#: level functional of the irreducible SO(3) inside SO(5): a weight
#: (a, b) restricts to 2a + b.
SUBGROUP_LEVEL = _vec(2, 1)


def weyl_dimension(system: RootSystem, label) -> int:
    return system.weyl_dimension(label)


def freudenthal(system: RootSystem, label) -> dict[Vector, int]:
    return system.freudenthal(label)


def klimyk_tensor(system: RootSystem, a, b) -> list[tuple[object, int]]:
    return system.klimyk_tensor(a, b)


def string_peel(levels: Counter) -> list[tuple[F, int]]:
    """Greedy decomposition of a level multiset into spin strings.

    Restriction multiplicities are symmetric and unimodal in the level,
    so repeatedly removing the string of the current top level is exact;
    a negative count on the way down means the input was not the level
    multiset of an actual module.
    """
    remaining = Counter({F(k): m for k, m in levels.items() if m})
    out: Counter = Counter()
    while remaining:
        top = max(remaining)
        if top < 0:
            raise ValueError("level multiset is not symmetric: %r" % (levels,))
        level = top
        while level >= -top:
            remaining[level] -= 1
            if remaining[level] < 0:
                raise ValueError(
                    "level multiset is not unimodal: %r" % (levels,))
            if remaining[level] == 0:
                del remaining[level]
            level -= 1
        out[top] += 1
    return sorted(out.items())


def _branch(system: RootSystem, label, functional: Vector) -> list[tuple[F, int]]:
    levels: Counter = Counter()
    for v, m in system.freudenthal(label).items():
        levels[_dot(v, functional)] += m
    peeled = string_peel(levels)
    assert sum(m * (2 * k + 1) for k, m in peeled) == system.weyl_dimension(label)
    return peeled


def branch_principal_sl2(label) -> list[tuple[F, int]]:
    """Spin content of a G2 irreducible under the principal subgroup."""
    return _branch(G2, label, PRINCIPAL_LEVEL)


def branch_so5_to_so3(p, q) -> list[tuple[F, int]]:
    """Spin content of the (p, q) irreducible under the maximal SO(3)."""
    return _branch(B2, (p, q), SUBGROUP_LEVEL)


# -- derived splittings used by the verification layer ---------------------

SPINOR_FACTOR_SPINS = (F(0), F(3))  # the 8-dimensional factor is spin 0 + spin 3


def spinor_square_two_ways() -> tuple[Counter, Counter]:
    """Spin content of the 64-dimensional tensor square, twice over.

    Once by Clebsch-Gordan on the spin-(0 + 3) factor squared, once by
    decomposing the square of (real + imaginary octonions) over G2 and
    branching every summand along the principal subgroup.  Agreement of
    the two Counters is the cross-check the verification layer runs.
    """
    direct: Counter = Counter()
    for j1 in SPINOR_FACTOR_SPINS:
        for j2 in SPINOR_FACTOR_SPINS:
            for k, m in A1.klimyk_tensor(j1, j2):
                direct[k] += m

    via_g2: Counter = Counter()
    octonion_summands = ((0, 0), (0, 1))
    for a in octonion_summands:
        for b in octonion_summands:
            for piece, mult in G2.klimyk_tensor(a, b):
                for k, m in branch_principal_sl2(piece):
                    via_g2[k] += mult * m
    return direct, via_g2


def imaginary_square_pieces() -> list[tuple[tuple[int, int], int]]:
    """G2 decomposition of the square of the 7-dimensional module."""
    return G2.klimyk_tensor((0, 1), (0, 1))


def disjoint_spin_content(labels=((0, 0), (0, 1), (1, 0), (0, 2))) -> bool:
    """Whether the listed G2 irreducibles share no principal spin."""
    seen: set[F] = set()
    for label in labels:
        spins = {k for k, _ in branch_principal_sl2(label)}
        if spins & seen:
            return False
        seen |= spins
    return True

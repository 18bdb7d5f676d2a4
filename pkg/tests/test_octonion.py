"""Cayley algebra, Clifford action, and the deformation operator spectrum."""
import random
from fractions import Fraction as F
from itertools import combinations

import pytest

from berger import liealg, octonion
from berger.matrix import SqrtMatrix, det
from berger.octonion import (Octonion, TRIPLES, action_scalar,
                             adjoint_sample_vector, casimir_eigenvalue,
                             clifford_right, clifford_volume,
                             commutes_with_lifted_isotropy,
                             cross_contraction, cross_insertion,
                             deformation_operator, minimal_polynomial_check,
                             operator_block, spectrum,
                             standard_component_block, tangent_bracket_spinor,
                             tensor_unit, traceless_sample_vectors,
                             trivial_component_block, trivial_family_matrix,
                             unit_cliffords)
from berger.scalar import SqrtField


def t(p, q=1, rad=1):
    return SqrtField.term(F(p, q), rad)


def e(i):
    return Octonion.unit(i)


def random_octonion(rng):
    coords = [F(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(8)]
    x = Octonion(coords)
    if rng.random() < 0.3:
        x = x + Octonion.unit(rng.randint(0, 7)).scale(t(1, 1, rng.choice((2, 5))))
    return x


class TestCayleyTable:
    def test_first_triple(self):
        assert e(1) * e(2) == e(4)
        assert e(2) * e(1) == -e(4)

    def test_triples_are_cyclic(self):
        assert TRIPLES[0] == (1, 2, 4)
        for a, b, c in TRIPLES:
            assert e(a) * e(b) == e(c)
            assert e(b) * e(c) == e(a)
            assert e(c) * e(a) == e(b)

    def test_imaginary_units_square_to_minus_one(self):
        for i in range(1, 8):
            assert e(i) * e(i) == -e(0)

    def test_anticommutativity(self):
        for i, j in combinations(range(1, 8), 2):
            assert e(i) * e(j) == -(e(j) * e(i))

    def test_unit_element(self):
        x = Octonion([1, 2, 0, F(1, 3), 0, -1, 0, 5])
        assert e(0) * x == x
        assert x * e(0) == x

    def test_not_associative(self):
        assert (e(1) * e(2)) * e(3) != e(1) * (e(2) * e(3))


class TestAlgebraLaws:
    def test_alternativity_and_composition(self):
        rng = random.Random(83)
        for _ in range(200):
            x = random_octonion(rng)
            y = random_octonion(rng)
            assert (x * x) * y == x * (x * y)
            assert (y * x) * x == y * (x * x)
            assert (x * y).norm2() == x.norm2() * y.norm2()

    def test_conjugation_gives_norm(self):
        rng = random.Random(5)
        for _ in range(20):
            x = random_octonion(rng)
            n = x * x.conjugate()
            assert n.real_part() == x.norm2()
            assert all(c.is_zero() for c in n.imaginary_coords())


class TestCliffordAction:
    def test_action_on_one(self):
        v = [F(1, 2), 0, -2, 0, 0, F(3), 0]
        m = clifford_right(v)
        assert [m[(i, 0)] for i in range(8)] == list(Octonion.imaginary(v).coords)

    def test_anticommutation_relations(self):
        # {c_i, c_j} = -2 delta_ij on all 28 unordered basis pairs
        cl = unit_cliffords()
        eye = SqrtMatrix.identity(8)
        for i in range(7):
            for j in range(i, 7):
                anti = cl[i] @ cl[j] + cl[j] @ cl[i]
                expected = eye.scale(-2) if i == j else SqrtMatrix.zeros(8)
                assert anti == expected

    def test_general_clifford_relation(self):
        rng = random.Random(17)
        for _ in range(5):
            v = [F(rng.randint(-2, 2)) for _ in range(7)]
            w = [F(rng.randint(-2, 2)) for _ in range(7)]
            cv, cw = clifford_right(v), clifford_right(w)
            pairing = sum(a * b for a, b in zip(v, w))
            assert cv @ cw + cw @ cv == SqrtMatrix.identity(8).scale(-2 * pairing)

    def test_volume_element_is_identity(self):
        assert clifford_volume() == SqrtMatrix.identity(8)

    def test_bracket_agrees_with_cayley_product(self):
        # [e_i, e_j]_p = (1/sqrt5) e_i * e_j on all 21 pairs
        es = liealg.p_basis()
        inv5 = t(1, 5, 5)
        for i, j in combinations(range(7), 2):
            prod = e(i + 1) * e(j + 1)
            assert prod.real_part().is_zero()
            expected = [c * inv5 for c in prod.imaginary_coords()]
            assert liealg.project_p(liealg.bracket(es[i], es[j])) == expected


class TestBracketSpinor:
    def test_commutator_reproduces_bracket_action(self):
        # [lift(g_i), c_v] = c_{[g_i, v]_p} for every basis direction
        c = liealg.structure_constants()
        for i in range(10):
            a = tangent_bracket_spinor(i)
            for l in range(7):
                cl = unit_cliffords()[l]
                image = clifford_right(list(c[i][l]))
                assert a @ cl - cl @ a == image

    def test_isotropy_lifts_are_skew(self):
        for i in (7, 8, 9):
            a = tangent_bracket_spinor(i)
            assert (a + a.transpose()).is_zero()

    def test_isotropy_lift_homomorphism(self):
        # [f1, f2] = (1/sqrt5) f3 carries over to the lifts
        a7, a8, a9 = (tangent_bracket_spinor(i) for i in (7, 8, 9))
        assert a7.commutator(a8) == a9.scale(t(1, 5, 5))


class TestDeformationOperator:
    def test_symmetric(self):
        assert deformation_operator().is_symmetric()

    def test_trivial_component_block(self):
        expected = SqrtMatrix([[t(7, 10, 5), t(-3, 10, 35)],
                               [t(-3, 10, 35), t(1, 2, 5)]])
        assert trivial_component_block() == expected

    def test_standard_component_block(self):
        expected = SqrtMatrix([[t(-1, 10, 5), t(3, 10, 5), t(3, 10, 30)],
                               [t(3, 10, 5), t(7, 10, 5), t(1, 10, 30)],
                               [t(3, 10, 30), t(1, 10, 30), t(-2, 5, 5)]])
        assert standard_component_block() == expected

    def test_block_rejects_non_invariant_span(self):
        with pytest.raises(AssertionError):
            operator_block((tensor_unit(0, 0),))

    def test_scalar_action_on_adjoint_component(self):
        assert action_scalar(adjoint_sample_vector()) == t(1, 5, 5)

    def test_scalar_action_on_traceless_component(self):
        s, d = traceless_sample_vectors()
        assert action_scalar(s) == t(-1, 5, 5)
        assert action_scalar(d) == t(-1, 5, 5)

    def test_cross_contraction_adjointness(self):
        z = [t(1), t(-2), SqrtField(), t(1, 2), SqrtField(), SqrtField(), t(3)]
        assert cross_contraction(cross_insertion(z)) == [c * 6 for c in z]

    def test_minimal_polynomial(self):
        assert minimal_polynomial_check()

    def test_every_listed_eigenvalue_occurs(self):
        # dropping any one shift leaves a nonzero product
        b0 = deformation_operator()
        eye = SqrtMatrix.identity(64)
        eigs = spectrum()
        for skip in range(5):
            prod = None
            for k, lam in enumerate(eigs):
                if k == skip:
                    continue
                shifted = b0 - eye.scale(lam)
                prod = shifted if prod is None else prod @ shifted
            assert not prod.is_zero()

    def test_commutes_with_lifted_isotropy(self):
        assert commutes_with_lifted_isotropy()

    def test_does_not_commute_with_clifford(self):
        eye = SqrtMatrix.identity(8)
        c1 = unit_cliffords()[0]
        lifted = c1.tensor(eye) + eye.tensor(c1)
        b0 = deformation_operator()
        assert not (b0 @ lifted - lifted @ b0).is_zero()

    def test_block_eigenvalues_by_characteristic_polynomial(self):
        def charpoly_at(m, lam):
            return det(m - SqrtMatrix.identity(m.nrows).scale(lam))

        tb = trivial_component_block()
        assert charpoly_at(tb, t(7, 5, 5)).is_zero()
        assert charpoly_at(tb, t(-1, 5, 5)).is_zero()
        assert not charpoly_at(tb, t(1, 5, 5)).is_zero()
        sb = standard_component_block()
        for lam in (t(1, 5, 5), t(1, 1, 5), t(-1, 1, 5)):
            assert charpoly_at(sb, lam).is_zero()
        assert not charpoly_at(sb, t(7, 5, 5)).is_zero()


class TestTrivialFamily:
    def test_base_point_is_diagonal(self):
        z = SqrtField()
        assert trivial_family_matrix(0) == SqrtMatrix(
            [[t(7, 10, 5), z], [z, t(-1, 10, 5)]])

    def test_closed_form(self):
        for mu in (F(0), F(1, 4), F(1, 2)):
            got = trivial_family_matrix(mu)
            expected = SqrtMatrix(
                [[t((7 + 7 * mu) / 10, 1, 5), t(-3 * mu / 10, 1, 35)],
                 [t(-3 * mu / 10, 1, 35), t((5 * mu - 1) / 10, 1, 5)]])
            assert got == expected

    def test_determinant_identity(self):
        for mu in (F(0), F(1, 4), F(1, 3), F(1, 2), F(2), F(-1)):
            d = det(trivial_family_matrix(mu))
            assert d.as_rational() == F(-7, 20) * (2 * mu - 1) ** 2

    def test_eigenvalue_sign_pattern(self):
        # negative determinant = one positive and one negative eigenvalue
        for mu in (F(0), F(1, 4)):
            assert det(trivial_family_matrix(mu)).sign() == -1
        assert det(trivial_family_matrix(F(1, 2))).is_zero()

    def test_discriminant_identity(self):
        # (6 mu + 3)^2 + 7 (2 mu - 1)^2 = 64 mu^2 + 8 mu + 16
        for mu in (F(0), F(1), F(-1), F(1, 2), F(1, 3)):
            lhs = (6 * mu + 3) ** 2 + 7 * (2 * mu - 1) ** 2
            assert lhs == 64 * mu ** 2 + 8 * mu + 16

    def test_deformation_radius_stays_below_gap(self):
        # at mu = 1/2 the deformation reaches 7/(2 sqrt5), below 9/(2 sqrt5)
        assert F(49, 4) < F(81, 4)
        radius_sq = F(7, 2) ** 2 / 5
        assert radius_sq < casimir_eigenvalue(1, 0, "imaginary")


class TestCasimir:
    def test_reference_values(self):
        assert casimir_eigenvalue(0, 0, "real") == F(49, 20)
        assert casimir_eigenvalue(1, 0, "imaginary") == F(81, 20)
        assert casimir_eigenvalue(1, 1, "imaginary") == F(121, 20)

    def test_closed_forms(self):
        for p in range(7):
            for q in range(p + 1):
                if p + q > 6:
                    continue
                base = p * p + 3 * p + q * q + q
                assert casimir_eigenvalue(p, q, "real") == base + F(49, 20)
                assert casimir_eigenvalue(p, q, "imaginary") == base + F(1, 20)

    def test_kernel_exclusion_sweep(self):
        gap = F(81, 20)
        for p in range(7):
            for q in range(p + 1):
                if p + q > 6 or (p, q) == (0, 0):
                    continue
                for factor in ("real", "imaginary"):
                    assert casimir_eigenvalue(p, q, factor) >= gap

    def test_monotone_differencing(self):
        for p in range(6):
            for q in range(p + 1):
                here = casimir_eigenvalue(p, q, "imaginary")
                assert casimir_eigenvalue(p + 1, q, "imaginary") - here == 2 * p + 4
                if q + 1 <= p:
                    step = casimir_eigenvalue(p, q + 1, "imaginary") - here
                    assert step == 2 * q + 2

    def test_rejects_bad_input(self):
        with pytest.raises(ValueError):
            casimir_eigenvalue(1, 2, "real")
        with pytest.raises(ValueError):
            casimir_eigenvalue(-1, -1, "real")
        with pytest.raises(ValueError):
            casimir_eigenvalue(1, 0, "spinor")

"""Field arithmetic in Q(sqrt2, sqrt3, sqrt5, sqrt7) and pi-graded scalars."""
import random
from fractions import Fraction as F

import pytest

from berger.scalar import (PI, RADICANDS, PiScalar, SqrtField, rational_to_json)


def sq(r):
    return SqrtField.sqrt(r)


def rat(p, q=1):
    return SqrtField.rational(F(p, q))


class TestSqrtFieldBasics:
    def test_radicands_are_the_divisors_of_210(self):
        assert RADICANDS == (1, 2, 3, 5, 6, 7, 10, 14, 15, 21, 30, 35, 42, 70, 105, 210)

    def test_sqrt2_times_sqrt3(self):
        assert sq(2) * sq(3) == sq(6)

    def test_sqrt10_times_sqrt14_extracts_square(self):
        # sqrt(10)*sqrt(14) = 2*sqrt(35)
        assert sq(10) * sq(14) == SqrtField.term(2, 35)

    def test_sqrt_squares_to_radicand(self):
        for r in RADICANDS:
            assert sq(r) * sq(r) == rat(r)

    def test_difference_of_squares(self):
        # (1+sqrt5)(sqrt5-1)/4 = 1
        lhs = (rat(1) + sq(5)) * (sq(5) - rat(1))
        assert lhs == rat(4)
        assert lhs * rat(1, 4) == rat(1)

    def test_rejects_non_divisor_radicand(self):
        with pytest.raises(ValueError):
            SqrtField({4: F(1)})
        with pytest.raises(ValueError):
            SqrtField({11: F(1)})

    def test_rendering(self):
        x = rat(3, 2) - SqrtField.term(F(1, 3), 10)
        assert str(x) == "3/2 - 1/3*sqrt(10)"
        assert str(SqrtField()) == "0"


class TestInverse:
    def test_inverse_of_sqrt5(self):
        assert sq(5).inverse() == SqrtField.term(F(1, 5), 5)

    def test_inverse_of_one_plus_sqrt5(self):
        # 1/(1+sqrt5) = (sqrt5-1)/4
        x = rat(1) + sq(5)
        assert x.inverse() == (sq(5) - rat(1)) * rat(1, 4)

    def test_inverse_of_rational(self):
        assert rat(7).inverse() == rat(1, 7)

    def test_inverse_roundtrip_random(self):
        rng = random.Random(20110)
        for _ in range(40):
            coords = {r: F(rng.randint(-4, 4), rng.randint(1, 5))
                      for r in rng.sample(RADICANDS, rng.randint(1, 4))}
            x = SqrtField(coords)
            if x.is_zero():
                continue
            assert x * x.inverse() == rat(1)

    def test_division(self):
        assert (sq(2) / sq(5)) * sq(5) == sq(2)
        assert sq(10) / sq(2) == sq(5)


class TestSign:
    def test_sign_of_three_minus_sqrt5(self):
        assert (rat(3) - sq(5)).sign() == 1

    def test_sign_of_close_call(self):
        # sqrt6 - sqrt5 - 1/10 is approximately 0.11; exact refinement gets it
        x = sq(6) - sq(5) - rat(1, 10)
        assert x.sign() == 1

    def test_sign_of_tight_negative(self):
        # sqrt2 + sqrt3 - sqrt5 = 0.91019...; subtracting 911/1000 leaves -0.0008
        x = sq(2) + sq(3) - sq(5) - rat(911, 1000)
        assert x.sign() == -1

    def test_sign_zero(self):
        assert (sq(6) - sq(2) * sq(3)).sign() == 0

    def test_sign_matches_float_when_not_tiny(self):
        rng = random.Random(7)
        for _ in range(60):
            coords = {r: F(rng.randint(-6, 6), rng.randint(1, 7))
                      for r in rng.sample(RADICANDS, rng.randint(1, 5))}
            x = SqrtField(coords)
            fx = float(x)
            if abs(fx) >= 1e-6:
                assert x.sign() == (1 if fx > 0 else -1)

    def test_order_operators(self):
        assert sq(2) < sq(3) < sq(5) < sq(6) < sq(7)
        assert rat(2) < sq(5) < rat(9, 4)


class TestFieldAxioms:
    def _random_elements(self, n, seed):
        rng = random.Random(seed)
        out = []
        for _ in range(n):
            coords = {r: F(rng.randint(-3, 3), rng.randint(1, 4))
                      for r in rng.sample(RADICANDS, 3)}
            out.append(SqrtField(coords))
        return out

    def test_ring_axioms_random(self):
        xs = self._random_elements(12, seed=99)
        for i in range(0, 12, 3):
            a, b, c = xs[i], xs[i + 1], xs[i + 2]
            assert a * (b + c) == a * b + a * c
            assert (a * b) * c == a * (b * c)
            assert a + b == b + a
            assert a * b == b * a

    def test_subtraction_and_negation(self):
        a = sq(2) + rat(1, 2)
        assert a - a == SqrtField()
        assert -(-a) == a

    def test_pow(self):
        x = rat(1) + sq(2)
        assert x ** 2 == rat(3) + SqrtField.term(2, 2)
        assert x ** 0 == rat(1)
        assert x ** -1 == x.inverse()


class TestPiScalar:
    def test_grading_addition(self):
        a = PiScalar.of(sq(5), 2)
        b = PiScalar.of(rat(1, 3), 2)
        s = a + b
        assert s.coefficient(2) == sq(5) + rat(1, 3)
        assert s.pi_degrees() == (2,)

    def test_multiplication_adds_exponents(self):
        a = PiScalar.of(rat(2), -4)
        b = PiScalar.of(sq(5), 4)
        assert a * b == PiScalar.of(SqrtField.term(2, 5), 0)
        assert (a * b).is_pi_free()

    def test_pi_constant(self):
        assert (PI * PI).coefficient(2) == rat(1)

    def test_as_rational(self):
        x = PiScalar.of(rat(-49, 50000))
        assert x.as_rational() == F(-49, 50000)
        with pytest.raises(ValueError):
            PiScalar.of(rat(1), 2).as_rational()

    def test_mixed_degrees_render(self):
        x = PiScalar.of(rat(8), 2) + PiScalar.of(sq(5), 0)
        assert str(x) == "sqrt(5) + 8*pi^2"

    def test_json_shape(self):
        x = PiScalar.of(SqrtField.term(F(16, 75), 5), 4)
        assert x.to_json() == {
            "pi_terms": [{"k": 4, "coeffs": [{"rad": 5, "num": "16", "den": "75"}]}]
        }
        assert rational_to_json(F(-27, 1120)) == {"num": "-27", "den": "1120"}

    def test_zero_is_dropped(self):
        x = PiScalar.of(rat(1), 3) - PiScalar.of(rat(1), 3)
        assert x.is_zero()
        assert x.pi_degrees() == ()

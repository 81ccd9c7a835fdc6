import random
from fractions import Fraction

import pytest

from bernkit import fps
from bernkit.classical import (Poly, bernoulli, bernoulli_poly,
                               bernoulli_poly_at, cauchy1, cauchy1_integral,
                               euler_at_one, euler_number, euler_poly, hw,
                               hw_closed_integer, worpitzky_bernoulli)
from bernkit.seqcore import binom_int, harmonic


class TestBernoulli:
    def test_printed_values(self):
        assert bernoulli(0) == 1
        assert bernoulli(1) == Fraction(-1, 2)
        assert bernoulli(2) == Fraction(1, 6)
        assert bernoulli(4) == Fraction(-1, 30)

    def test_odd_vanish(self):
        assert bernoulli(7) == 0
        assert all(bernoulli(2 * n + 1) == 0 for n in range(1, 30))

    def test_b12(self):
        assert bernoulli(12) == Fraction(-691, 2730)

    def test_defining_recurrence(self):
        for n in range(1, 60):
            assert sum(binom_int(n + 1, j) * bernoulli(j)
                       for j in range(n + 1)) == 0

    def test_route_equality_with_worpitzky(self):
        for n in range(1, 101):
            assert bernoulli(n) == worpitzky_bernoulli(n)

    def test_worpitzky_small(self):
        assert worpitzky_bernoulli(1) == Fraction(-1, 2)
        assert worpitzky_bernoulli(2) == Fraction(1, 6)
        assert worpitzky_bernoulli(3) == 0


class TestBernoulliPoly:
    def test_degree_two(self):
        assert bernoulli_poly(2) == Poly([Fraction(1, 6), -1, 1])
        assert bernoulli_poly_at(2, 1) == Fraction(1, 6)

    def test_value_at_zero(self):
        for n in range(41):
            assert bernoulli_poly_at(n, 0) == bernoulli(n)

    def test_reflection(self):
        # (-1)^n B_n(-x) = B_n(x) + n x^(n-1) at n=3, x=2
        assert -bernoulli_poly_at(3, -2) == bernoulli_poly_at(3, 2) + 12
        for n in range(1, 15):
            for x in (Fraction(1, 2), 2, -3):
                x = Fraction(x)
                assert ((-1) ** n * bernoulli_poly_at(n, -x)
                        == bernoulli_poly_at(n, x) + n * x ** (n - 1))


class TestEuler:
    def test_even_numbers_vanish(self):
        assert euler_number(0) == 1
        assert all(euler_number(2 * m) == 0 for m in range(1, 25))

    def test_first_four_sum(self):
        assert sum(euler_number(j) for j in range(4)) == Fraction(3, 4)

    def test_at_one_vs_bernoulli(self):
        # E_k(1) = -E_k(0) = 2(2^(k+1)-1) B_(k+1)/(k+1); fails at k=0
        # (E_0 is the constant 1), holds from k=1 on.
        assert euler_at_one(1) == -euler_number(1) == Fraction(1, 2)
        for k in range(1, 41):
            closed = 2 * (2 ** (k + 1) - 1) * bernoulli(k + 1) / (k + 1)
            assert euler_at_one(k) == -euler_number(k) == closed

    def test_doubled_values_integral(self):
        for m in range(61):
            v = 2**m * euler_number(m)
            assert v.denominator == 1

    def test_poly_matches_series_oracle(self):
        for x in (Fraction(0), Fraction(1), Fraction(-1, 2), Fraction(2, 3)):
            series = fps.named_series("euler-poly-egf", 20, x=x)
            for n in range(21):
                assert euler_poly(n)(x) == series.egf(n)


class TestCauchy:
    def test_values(self):
        assert cauchy1(0) == 1
        assert cauchy1(1) == Fraction(1, 2)
        assert cauchy1(2) == Fraction(-1, 6)

    def test_matches_integral_oracle(self):
        for k in range(41):
            assert cauchy1(k) == cauchy1_integral(k)


class TestHw:
    def test_x_one(self):
        assert all(hw(n, 1) == 1 for n in range(1, 20))

    def test_direct_values(self):
        assert hw(2, 2) == 5
        assert hw(2, Fraction(-1, 2)) == Fraction(5, 8)

    def test_closed_integer_route(self):
        assert hw_closed_integer(2, 2) == 5
        assert hw_closed_integer(3, 2) == 11
        for n in range(1, 13):
            assert hw_closed_integer(n, 1) == 1
            for m in range(1, 8):
                assert hw_closed_integer(n, m) == hw(n, m)

    def test_requires_positive_n(self):
        with pytest.raises(ValueError):
            hw(0, 1)


def test_agoh_harmonic_equality():
    # sum_k C(m,k) H_k (z-1)^k = H_m z^m - sum_k z^k/(m-k)
    rng = random.Random(5)
    for m in range(1, 21):
        for _ in range(10):
            z = Fraction(rng.randint(-15, 15), rng.randint(1, 9))
            lhs = sum(binom_int(m, k) * harmonic(k) * (z - 1) ** k
                      for k in range(1, m + 1))
            rhs = harmonic(m) * z**m - sum(z**k / Fraction(m - k)
                                           for k in range(m))
            assert lhs == rhs


class TestPoly:
    def test_trailing_zeros_trimmed(self):
        assert Poly([1, 2, 0, 0]) == Poly([1, 2])
        assert Poly([0, 0]) == Poly([0])

    def test_arithmetic(self):
        p = Poly([1, 1])
        q = Poly([-1, 1])
        assert p * q == Poly([-1, 0, 1])
        assert (p + q) == Poly([0, 2])
        assert (p - q) == Poly([2])

    def test_exact_evaluation(self):
        p = Poly([Fraction(1, 3), 0, 1])
        assert p(Fraction(1, 2)) == Fraction(7, 12)

    def test_integral(self):
        assert Poly([0, 1]).integral_01() == Fraction(1, 2)

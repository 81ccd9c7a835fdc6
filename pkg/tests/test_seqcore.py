import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from bernkit.seqcore import (binom, binom_int, factorial, harmonic,
                             harmonic_gen, stirling1, stirling2)


def count_set_partitions(n, k):
    """Brute-force oracle: partitions of {0..n-1} into k nonempty blocks."""
    def rec(i, blocks):
        if i == n:
            return 1 if len(blocks) == k else 0
        total = 0
        for b in blocks:
            b.append(i)
            total += rec(i + 1, blocks)
            b.pop()
        if len(blocks) < k:
            blocks.append([i])
            total += rec(i + 1, blocks)
            blocks.pop()
        return total
    return rec(0, []) if n else (1 if k == 0 else 0)


def count_cycle_permutations(n, k):
    """Brute-force oracle: permutations of n elements with exactly k cycles."""
    import itertools
    total = 0
    for perm in itertools.permutations(range(n)):
        seen = [False] * n
        cycles = 0
        for i in range(n):
            if not seen[i]:
                cycles += 1
                j = i
                while not seen[j]:
                    seen[j] = True
                    j = perm[j]
        if cycles == k:
            total += 1
    return total


class TestStirling2:
    def test_diagonal(self):
        assert all(stirling2(n, n) == 1 for n in range(12))

    def test_3_2_matches_enumeration(self):
        assert count_set_partitions(3, 2) == 3
        assert stirling2(3, 2) == 3

    def test_5_3(self):
        assert stirling2(5, 3) == 25
        assert stirling2(5, 3) % 5 == 0

    @pytest.mark.parametrize("n", range(7))
    def test_small_triangle_matches_enumeration(self, n):
        for k in range(n + 2):
            assert stirling2(n, k) == count_set_partitions(n, k)

    def test_above_diagonal_zero(self):
        assert stirling2(4, 7) == 0

    def test_edge_rows(self):
        assert stirling2(0, 0) == 1
        assert all(stirling2(n, 0) == 0 for n in range(1, 10))
        assert all(stirling2(n, 1) == 1 for n in range(1, 10))

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            stirling2(-1, 0)


class TestStirling1:
    def test_4_1(self):
        assert stirling1(4, 1) == 6
        assert count_cycle_permutations(4, 1) == 6

    def test_diagonal(self):
        assert all(stirling1(n, n) == 1 for n in range(12))

    def test_3_2_matches_enumeration(self):
        assert stirling1(3, 2) == 3 == count_cycle_permutations(3, 2)

    @pytest.mark.parametrize("n", range(7))
    def test_small_triangle_matches_enumeration(self, n):
        for k in range(n + 1):
            assert stirling1(n, k) == count_cycle_permutations(n, k)

    def test_row_sums_are_factorials(self):
        for n in range(41):
            assert sum(stirling1(n, k) for k in range(n + 1)) == factorial(n)

    def test_first_two_columns(self):
        # [k,1] = (k-1)! and [k,2] = (k-1)! H_(k-1)
        for k in range(1, 41):
            assert stirling1(k, 1) == factorial(k - 1)
            assert stirling1(k, 2) == factorial(k - 1) * harmonic(k - 1)

    def test_third_column_harmonic_form(self):
        for k in range(3, 41):
            expected = (Fraction(factorial(k - 1), 2)
                        * (harmonic(k - 1) ** 2 - harmonic_gen(k - 1, 2)))
            assert stirling1(k, 3) == expected


def rising_factorial(x, n):
    out = Fraction(1)
    for i in range(n):
        out *= x + i
    return out


def test_rising_factorial_expansion():
    rng = random.Random(7)
    for n in range(1, 21):
        for _ in range(20):
            x = Fraction(rng.randint(-30, 30), rng.randint(1, 10))
            total = sum(stirling1(n, k) * x**k for k in range(n + 1))
            assert total == rising_factorial(x, n)


def test_stirling_inversion():
    rng = random.Random(11)
    for n in range(1, 16):
        for _ in range(10):
            x = Fraction(rng.randint(-20, 20), rng.randint(1, 8))
            total = sum((-1) ** (n - k) * stirling2(n, k) * rising_factorial(x, k)
                        for k in range(n + 1))
            assert total == x**n


def test_hockey_stick():
    for n in range(1, 41):
        for j in range(1, n + 1):
            lhs = sum(binom_int(n - k, j - k) for k in range(j))
            assert lhs == binom_int(n + 1, j) - 1


class TestHarmonic:
    def test_values(self):
        assert harmonic(0) == 0
        assert harmonic(1) == 1
        assert harmonic(2) == Fraction(3, 2)
        assert harmonic(3) == Fraction(11, 6)

    @given(st.integers(min_value=1, max_value=400))
    def test_difference(self, n):
        assert harmonic(n) - harmonic(n - 1) == Fraction(1, n)

    def test_generalized(self):
        assert harmonic_gen(3, 1) == harmonic(3)
        assert harmonic_gen(2, 2) == Fraction(5, 4)
        assert harmonic_gen(0, 5) == 0

    @given(st.integers(min_value=0, max_value=60),
           st.integers(min_value=1, max_value=4))
    def test_generalized_is_partial_sum(self, n, m):
        assert harmonic_gen(n, m) == sum(
            (Fraction(1, i**m) for i in range(1, n + 1)), Fraction(0))

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            harmonic(-1)
        with pytest.raises(ValueError):
            harmonic_gen(3, 0)


class TestBinom:
    def test_half_negative(self):
        for k in range(12):
            expected = Fraction((-1) ** k * math.comb(2 * k, k), 4**k)
            assert binom(Fraction(-1, 2), k) == expected
        assert binom(Fraction(-1, 2), 2) == Fraction(3, 8)

    def test_k_zero(self):
        assert binom(Fraction(22, 7), 0) == 1

    def test_integer_agreement(self):
        assert binom(5, 2) == 10
        for n in range(-6, 12):
            for k in range(8):
                assert binom(n, k) == binom_int(n, k)

    @given(st.integers(min_value=0, max_value=30),
           st.integers(min_value=0, max_value=30))
    def test_matches_math_comb(self, n, k):
        assert binom_int(n, k) == math.comb(n, k)

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from bernkit.congr import (DenominatorDivisibleByP, Residue, check_congruence,
                           odd_primes_upto, prime_sweep, rational_mod)
from bernkit.seqcore import harmonic


class TestRationalMod:
    def test_examples(self):
        assert rational_mod(Fraction(-1, 2), 3, 3) == Residue(1, 3)
        assert rational_mod(Fraction(3, 4), 3, 3) == Residue(0, 3)

    def test_denominator_divisible(self):
        with pytest.raises(DenominatorDivisibleByP):
            rational_mod(Fraction(1, 3), 3, 3)

    def test_modulus_validation(self):
        with pytest.raises(ValueError):
            rational_mod(Fraction(1, 2), 15, 3)

    def test_square_modulus(self):
        assert rational_mod(Fraction(1, 2), 25, 5) == Residue(13, 5 * 5)

    @given(st.fractions(max_denominator=50), st.fractions(max_denominator=50))
    def test_multiplicative(self, a, b):
        p = 7
        if a.denominator % p == 0 or b.denominator % p == 0:
            return
        ra = rational_mod(a, p, p).value
        rb = rational_mod(b, p, p).value
        assert rational_mod(a * b, p, p).value == ra * rb % p


def test_residue_range_enforced():
    with pytest.raises(ValueError):
        Residue(7, 5)


def test_odd_primes():
    assert odd_primes_upto(20) == [3, 5, 7, 11, 13, 17, 19]
    with pytest.raises(ValueError):
        odd_primes_upto(2)


class TestCatalog:
    def test_c1_at_3(self):
        (res,) = check_congruence("C1", 3)
        assert res.lhs == Residue(2, 3) == res.rhs
        assert res.passed

    def test_c4_at_5(self):
        (res,) = check_congruence("C4", 5)
        assert res.lhs == Residue(4, 5)
        assert res.passed

    def test_c4_below_5_rejected(self):
        with pytest.raises(ValueError):
            check_congruence("C4", 3)

    def test_c2_at_3(self):
        (res,) = check_congruence("C2", 3)
        assert res.lhs == Residue(0, 3) == res.rhs
        assert res.passed

    def test_babbage_at_5(self):
        assert harmonic(4) == Fraction(25, 12)
        (res,) = check_congruence("BABBAGE", 5)
        assert res.lhs == Residue(0, 5)
        assert res.passed

    def test_vsc_both_branches(self):
        results = check_congruence("VSC", 7)
        hit = {res.label: res for res in results}
        assert hit["j=3"].rhs.value == 6     # (p-1) | 2j
        assert hit["j=1"].rhs.value == 0
        assert all(res.passed for res in results)

    def test_cp1_sub_cases(self):
        results = check_congruence("CP1", 11)
        assert [res.label for res in results] == ["c_p", "p*c_(p-1)"]
        assert all(res.passed for res in results)

    def test_stirp(self):
        results = check_congruence("STIRP", 11)
        assert len(results) == 9  # k = 2 .. p-1
        assert all(res.passed for res in results)

    def test_unknown_id(self):
        with pytest.raises(KeyError):
            check_congruence("NOPE", 5)

    def test_composite_p_rejected(self):
        with pytest.raises(ValueError):
            check_congruence("C1", 9)


def test_sweep_small():
    report = prime_sweep(p_max=31)
    assert report.passed
    assert report.cases > 0
    assert any("C4 at p=3" in s for s in report.skipped)


def test_sweep_deterministic():
    a = prime_sweep(("C1", "BABBAGE"), 23)
    b = prime_sweep(("C1", "BABBAGE"), 23)
    assert (a.cases, a.failures, a.skipped) == (b.cases, b.failures, b.skipped)

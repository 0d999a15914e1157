import math
import random

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from overpseudo.arith import (
    Budget,
    Factorization,
    TRIAL_DIVISION_LIMIT,
    factorize,
    gcd,
    is_prime,
    lcm,
    pow_mod,
)
from overpseudo.errors import EffortError


class TestPowMod:
    def test_examples(self):
        assert pow_mod(2, 11, 2047) == 1
        assert pow_mod(2, 0, 15) == 1
        assert pow_mod(2, 4, 15) == 1

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            pow_mod(2, 3, 1)
        with pytest.raises(ValueError):
            pow_mod(2, 3, 0)
        with pytest.raises(ValueError):
            pow_mod(2, -1, 7)

    @given(st.integers(0, 10**9), st.integers(0, 10**4), st.integers(0, 10**4),
           st.integers(2, 10**9))
    def test_composition(self, a, m, k, n):
        assert pow_mod(a, m * k, n) == pow_mod(pow_mod(a, m, n), k, n)


class TestIsPrime:
    def test_examples(self):
        assert is_prime(113)
        assert not is_prime(2047)
        assert not is_prime(1)
        assert not is_prime(0)
        assert is_prime(2)

    def test_matches_sieve_exhaustive(self):
        limit = 10**7
        sieve = bytearray(b"\x01") * (limit + 1)
        sieve[:2] = b"\x00\x00"
        for p in range(2, math.isqrt(limit) + 1):
            if sieve[p]:
                start = p * p
                sieve[start::p] = b"\x00" * ((limit - start) // p + 1)
        mismatches = [n for n in range(limit + 1) if is_prime(n) != bool(sieve[n])]
        assert mismatches == []

    @given(st.integers(2, 1 << 80))
    @settings(max_examples=300)
    def test_matches_sympy(self, n):
        assert is_prime(n) == sympy.isprime(n)

    def test_large_values(self):
        assert is_prime(2**89 - 1)
        assert is_prime(2**107 - 1)
        assert not is_prime(2**83 - 1)
        assert not is_prime((2**61 - 1) * (2**31 - 1))

    def test_perfect_squares_above_64_bits(self):
        p = sympy.nextprime(1 << 40)
        assert not is_prime(p * p)


class TestFactorize:
    def test_examples(self):
        assert factorize(3277).factors == ((29, 1), (113, 1))
        assert factorize(3277).complete
        assert factorize(1541955409).factors == ((499, 1), (1163, 1), (2657, 1))
        assert factorize(8).factors == ((2, 3),)
        assert factorize(1) == Factorization(1, (), True)

    def test_domain_error(self):
        with pytest.raises(ValueError):
            factorize(0)

    def test_matches_sympy_small(self):
        for n in range(1, 3000):
            fz = factorize(n)
            assert fz.complete
            assert dict(fz.factors) == sympy.factorint(n)

    def test_roundtrip_random_below_2_80(self):
        rng = random.Random(80801)
        for _ in range(10**4):
            n = rng.randrange(2, 1 << 80)
            fz = factorize(n, Budget(4_000))
            assert fz.value == n
            assert fz.rebuild() == n
            assert list(fz.factors) == sorted(fz.factors)
            assert fz.complete == (fz.unfactored_cofactor == 1)
            for p, e in fz.factors:
                assert e >= 1
                assert is_prime(p)

    def test_budget_exhaustion_is_encoded_not_raised(self):
        p = sympy.nextprime(1 << 40)
        q = sympy.nextprime(p)
        fz = factorize(p * q, Budget(50))
        assert not fz.complete
        assert fz.unfactored_cofactor == p * q
        assert fz.rebuild() == p * q

    def test_hard_composite_completes_with_default_budget(self):
        fz = factorize(2**101 - 1)
        assert fz.complete
        assert fz.factors == ((7432339208719, 1), (341117531003194129, 1))

    def test_divisors(self):
        assert factorize(12).divisors() == [1, 2, 3, 4, 6, 12]
        with pytest.raises(ValueError):
            Factorization(15, (), False, 15).divisors()


class TestBudget:
    def test_charge_raises_past_limit(self):
        b = Budget(10)
        b.charge(10)
        with pytest.raises(EffortError):
            b.charge(1)

    def test_try_charge_does_not_overspend(self):
        b = Budget(10)
        assert b.try_charge(7)
        assert not b.try_charge(4)
        assert b.spent == 7


def test_gcd_lcm_examples():
    assert gcd(2047, 3277) == 1
    assert lcm(4, 2) == 4
    assert gcd(0, 7) == 7
    assert gcd(0, 0) == 0
    assert lcm(0, 5) == 0

import random
from math import gcd

import pytest
import sympy

from _oracles import MEMBERS_1E6
from overpseudo import (
    common_witness,
    is_overpseudoprime_base,
    least_witness,
)


class TestIsOverpseudoprimeBase:
    def test_carmichael_like_example(self):
        assert is_overpseudoprime_base(1541955409, 2) is True
        assert is_overpseudoprime_base(1541955409, 3) is False

    def test_base_n_minus_1_always_true(self):
        for n in (9, 15, 341, 561, 2047):
            assert is_overpseudoprime_base(n, n - 1)

    def test_base_1_always_true(self):
        for n in (9, 15, 341):
            assert is_overpseudoprime_base(n, 1)

    def test_structural_bases_random(self):
        rng = random.Random(1713)
        done = 0
        while done < 500:
            n = rng.randrange(9, 10**5, 2)
            if sympy.isprime(n):
                continue
            done += 1
            assert is_overpseudoprime_base(n, 1)
            assert is_overpseudoprime_base(n, n - 1)

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            is_overpseudoprime_base(15, 3)
        with pytest.raises(ValueError):
            is_overpseudoprime_base(17, 2)
        with pytest.raises(ValueError):
            is_overpseudoprime_base(16, 3)
        with pytest.raises(ValueError):
            is_overpseudoprime_base(15, 0)

    def test_base_2_matches_classifier(self):
        from overpseudo import is_overpseudoprime_def

        for n in range(9, 3000, 2):
            if sympy.isprime(n):
                continue
            assert is_overpseudoprime_base(n, 2) == is_overpseudoprime_def(n)


class TestLeastWitness:
    def test_examples(self):
        assert least_witness(1541955409).witness == 3
        assert least_witness(9).witness == 2
        assert least_witness(341).witness == 2

    def test_record_fields(self):
        rec = least_witness(1541955409)
        assert rec.bases_checked == 2
        assert rec.skipped_noncoprime == 0
        rec = least_witness(9)
        assert rec.bases_checked == 1
        assert rec.skipped_noncoprime == 0

    def test_base_2_is_never_skipped_for_odd_n(self):
        rec = least_witness(15)
        assert rec.witness == 2
        assert rec.skipped_noncoprime == 0
        rec2 = least_witness(25)
        assert rec2.witness == 2

    def test_witness_2_iff_not_overpseudoprime_base2(self):
        for n in range(9, 2000, 2):
            if sympy.isprime(n):
                continue
            rec = least_witness(n)
            if is_overpseudoprime_base(n, 2):
                assert rec.witness is None or rec.witness >= 3
            else:
                assert rec.witness == 2

    def test_enumerated_members_need_base_3(self):
        for n in MEMBERS_1E6:
            rec = least_witness(n)
            assert rec.witness == 3
            assert rec.bases_checked == 2

    def test_domain_error(self):
        with pytest.raises(ValueError):
            least_witness(13)


class TestCommonWitness:
    def test_examples(self):
        assert common_witness([9, 341], 10) == 2
        assert common_witness([1541955409], 2) is None
        assert common_witness([15], 10) == 2

    def test_noncoprime_base_does_not_witness(self):
        # 3 witnesses 341 but divides 15, so the pair needs a larger base
        assert common_witness([15, 341], 10) == 2
        assert common_witness([9, 15], 10) == 2

    def test_gcd_skip_convention(self):
        # for n = 9 alone, base 3 is skipped: it cannot be the answer
        assert common_witness([9], 10) == 2

    def test_bases_beyond_smallest_member_act_by_residue(self):
        # 2047 is overpseudoprime to bases 2, 4, 8; gcds block 3, 5, 6, 7,
        # 9, 10, 11, 12; the scan must walk past 9 - 1 without erroring
        assert common_witness([9, 25, 49, 341, 2047], 20) == 13

    def test_empty_domain_error(self):
        with pytest.raises(ValueError):
            common_witness([], 10)

"""Acceptance criteria, one test per criterion, each printing a verdict line.

Every expected value is asserted exactly as stated; the suite does not relax
a criterion even where an independent oracle disagrees with it, so a failing
line here means the stated value and the computed mathematics part ways.
"""

import math
from math import gcd

import pytest

import _verdicts
from _oracles import brute_overpseudoprimes
from overpseudo import (
    Budget,
    bound_report,
    check_mersenne_dichotomy,
    classify,
    cyclotomic_cosets,
    enumerate_overpseudoprimes,
    generate_overpseudoprime,
    is_fermat_psp,
    is_overpseudoprime_base,
    is_overpseudoprime_criterion,
    is_overpseudoprime_def,
    is_strong_psp,
    is_super_poulet,
    least_overpseudoprime_with_order,
    least_witness,
    mult_order,
    ov_count_by_order,
)

GOLDEN_TABLE = {
    28: 3277, 36: 4033, 44: 838861, 52: 85489, 60: 80581, 68: 130561,
    76: 104653, 84: 20647621, 92: 280601, 100: 818201, 108: 68719214593,
}


def _verdict(criterion: str, failures: list) -> None:
    status = "PASS" if not failures else "FAIL"
    line = f"[acceptance] {criterion}: {status}" + (
        f" -- {failures}" if failures else "")
    print(line)
    _verdicts.record(line)
    assert not failures, failures


def test_criterion_01_golden_table():
    rows = {n: least_overpseudoprime_with_order(n)
            for n in range(28, 109, 8)}
    failures = [
        f"order {n}: got {rows[n]}, expected {expected}"
        for n, expected in GOLDEN_TABLE.items()
        if rows[n] != expected
    ]
    _verdict("criterion 01 golden table 28..108", failures)


def test_criterion_02_aurifeuillian_consistency():
    failures = []
    for k, expected in ((3, 3277), (4, 4033), (5, 838861)):
        value = generate_overpseudoprime(k)
        if value != expected:
            failures.append(f"k={k}: got {value}, expected {expected}")
        elif not is_overpseudoprime_def(value):
            failures.append(f"k={k}: {value} failed the definition check")
        if GOLDEN_TABLE[8 * k + 4] != expected:
            failures.append(f"k={k}: table entry mismatch")
    _verdict("criterion 02 aurifeuillian k=3,4,5", failures)


def test_criterion_03_carmichael_example():
    n = 1541955409
    report = classify(n)
    failures = []
    if report.flags.carmichael is not True:
        failures.append(f"carmichael flag is {report.flags.carmichael}, "
                        "expected True")
    if report.flags.overpseudoprime_base2 is not True:
        failures.append("overpseudoprime flag expected True")
    if report.h != 166:
        failures.append(f"h is {report.h}, expected 166")
    if is_overpseudoprime_base(n, 3) is not False:
        failures.append("base 3 unexpectedly passes")
    witness = least_witness(n).witness
    if witness != 3:
        failures.append(f"least witness is {witness}, expected 3")
    _verdict("criterion 03 carmichael example 1541955409", failures)


def test_criterion_04_worked_coset_example():
    dec = cyclotomic_cosets(2, 15)
    failures = []
    if dec.cosets != ((1, 2, 4, 8), (3, 6, 9, 12), (5, 10), (7, 11, 13, 14)):
        failures.append(f"cosets were {dec.cosets}")
    if (dec.r, dec.h) != (4, 4):
        failures.append(f"(r, h) was {(dec.r, dec.h)}")
    _verdict("criterion 04 cosets of 2 mod 15", failures)


def test_criterion_05_mersenne_dichotomy_to_61():
    import sympy

    expected_over = {11, 23, 29, 37, 41, 43, 47, 53, 59}
    expected_prime_tail = {13, 17, 19, 31, 61}
    failures = []
    verdicts = {}
    for p in sympy.primerange(2, 62):
        verdicts[p] = check_mersenne_dichotomy(p, Budget(5_000_000))
    got_over = {p for p, v in verdicts.items() if v == "overpseudoprime"}
    if got_over != expected_over:
        failures.append(f"overpseudoprime set was {sorted(got_over)}")
    missing_prime = {p for p in expected_prime_tail if verdicts[p] != "prime"}
    if missing_prime:
        failures.append(f"not classified prime: {sorted(missing_prime)}")
    _verdict("criterion 05 mersenne dichotomy p<=61", failures)


def test_criterion_06_definition_criterion_equivalence():
    from overpseudo import is_prime

    budget = Budget(10**9)
    failures = []
    for n in range(9, 10**5, 2):
        if is_prime(n):
            continue
        if is_overpseudoprime_def(n, budget) != \
                is_overpseudoprime_criterion(n, budget):
            failures.append(n)
    _verdict("criterion 06 def==criterion below 1e5", failures)


def test_criterion_07_implication_chain(record_1e7):
    members = [m for m in record_1e7.members if m <= 10**6]
    failures = []
    for m in members:
        if not is_super_poulet(m):
            failures.append(f"{m} not super-Poulet")
        if not is_strong_psp(m, 2):
            failures.append(f"{m} not strong psp")
        if not is_fermat_psp(m, 2):
            failures.append(f"{m} not Fermat psp")
    _verdict("criterion 07 implication chain below 1e6", failures)


def test_criterion_08_oracle_equivalence(oracle_members_1e5):
    failures = []
    got4 = enumerate_overpseudoprimes(10**4)
    if got4 != brute_overpseudoprimes(10**4):
        failures.append("mismatch at 1e4")
    got5 = enumerate_overpseudoprimes(10**5)
    if got5 != oracle_members_1e5:
        failures.append("mismatch at 1e5")
    if not got5 or got5[0] != 2047:
        failures.append(f"first member was {got5[:1]}, expected 2047")
    _verdict("criterion 08 enumeration matches oracle", failures)


def test_criterion_09_counting_bound(record_1e7):
    rows = bound_report([10**4, 10**5, 10**6, 10**7], Budget(200_000_000))
    failures = []
    for row in rows:
        if not row.ratio < 1:
            failures.append(f"ratio at {row.x} is {row.ratio}")
        if not math.isclose(row.x_1_2, row.x**0.5):
            failures.append(f"missing sqrt reference at {row.x}")
    if rows[-1].ov != record_1e7.ov:
        failures.append("sweep disagrees with the shared enumeration")
    _verdict("criterion 09 Ov(x) within x^(3/4)", failures)


def test_criterion_10_pairwise_coprimality(record_1e7):
    members = record_1e7.members
    orders = {m: mult_order(2, m) for m in members}
    failures = []
    for i, a in enumerate(members):
        for b in members[i + 1:]:
            if orders[a] != orders[b] and gcd(a, b) != 1:
                failures.append((a, b))
    _verdict("criterion 10 coprimality across orders (1e7)", failures)


def test_criterion_11_lemma_envelopes(primitive_parts_120, record_1e7):
    failures = []
    for n, part in primitive_parts_120.items():
        if not part.is_full_overpseudoprime:
            continue
        omega = sum(e for _, e in part.primitive_factors)
        if not omega < n / math.log2(n):
            failures.append(f"omega bound fails at n={n}")
    root = math.isqrt(record_1e7.x)
    for m in record_1e7.members:
        if not mult_order(2, m) <= root:
            failures.append(f"order cutoff fails at m={m}")
    _verdict("criterion 11 omega and order envelopes", failures)


def test_criterion_12_wieferich_square():
    n = 1194649
    failures = []
    report = classify(n)
    if report.flags.overpseudoprime_base2 is not True:
        failures.append("1093**2 not classified overpseudoprime")
    if report.h != 364:
        failures.append(f"h is {report.h}, expected 364")
    found = ov_count_by_order(n, 364)
    if found != 1:
        failures.append(f"by-order count at {n} is {found}, expected 1")
    _verdict("criterion 12 wieferich square 1194649", failures)

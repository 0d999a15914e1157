"""Overpseudoprimality to an arbitrary base and least-witness searches.

A base a with gcd(a, n) = 1 is a witness for the odd composite n when n
fails n == r_a(n) * h_a(n) + 1 at base a.  Bases 1 and n - 1 can never
witness (singleton cosets, and pairing x with n - x, respectively), so the
scan runs over 2 <= a <= n - 2.  Bases sharing a factor with n are skipped
and tallied; the coset definition does not cover them.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .arith import Budget, Factorization, factorize, is_prime
from .errors import EffortError
from .order import coset_count


@dataclass(frozen=True)
class WitnessRecord:
    """Least-witness scan outcome; witness is None if the scan range ran out."""

    n: int
    witness: int | None
    bases_checked: int
    skipped_noncoprime: int


def _validate_composite(n: int) -> None:
    if n < 9 or n % 2 == 0 or is_prime(n):
        raise ValueError("n must be an odd composite")


def is_overpseudoprime_base(n: int, a: int, budget: Budget | None = None,
                            *, factorization: Factorization | None = None) -> bool:
    """True iff n == r_a(n) * h_a(n) + 1 for the coset structure of base a."""
    _validate_composite(n)
    if not 1 <= a <= n - 1:
        raise ValueError("base must lie in [1, n-1]")
    if gcd(a, n) != 1:
        raise ValueError("base must be coprime to n")
    if budget is None:
        budget = Budget()
    # h_a | n - 1 is forced, so a failed Fermat condition decides early
    if pow(a, n - 1, n) != 1:
        return False
    r, h = coset_count(a, n, budget=budget, factorization=factorization)
    return n == r * h + 1


def least_witness(n: int, budget: Budget | None = None) -> WitnessRecord:
    """Scan a = 2, 3, ... for the least base witnessing n.

    Noncoprime bases are skipped.  If no coprime base below n - 1
    witnesses, the record carries witness=None.
    """
    _validate_composite(n)
    if budget is None:
        budget = Budget()
    fz = factorize(n, budget)
    if not fz.complete:
        raise EffortError(f"incomplete factorization of {n}", partial=None)
    checked = skipped = 0
    for a in range(2, n - 1):
        if gcd(a, n) != 1:
            skipped += 1
            continue
        checked += 1
        if not is_overpseudoprime_base(n, a, budget, factorization=fz):
            return WitnessRecord(n, a, checked, skipped)
    return WitnessRecord(n, None, checked, skipped)


def common_witness(ns, a_max: int, budget: Budget | None = None) -> int | None:
    """Least a <= a_max witnessing every n in ns, or None.

    A base sharing a factor with some n does not count as witnessing that
    n, matching the skip convention of least_witness.  Bases beyond n act
    through their residue (the coset structure only sees a mod n).
    """
    ns = list(ns)
    if not ns:
        raise ValueError("ns must be nonempty")
    for n in ns:
        _validate_composite(n)
    if budget is None:
        budget = Budget()
    fzs = {n: factorize(n, budget) for n in ns}

    def witnesses(a: int, n: int) -> bool:
        if gcd(a, n) != 1:
            return False
        return not is_overpseudoprime_base(n, a % n, budget,
                                           factorization=fzs[n])

    for a in range(2, a_max + 1):
        if all(witnesses(a, n) for n in ns):
            return a
    return None

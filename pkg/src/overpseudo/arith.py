"""Exact integer arithmetic: primality, budgeted factoring, gcd/lcm.

Everything works on plain Python ints, which are arbitrary precision;
no float enters any result that is meant to be exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from math import gcd, lcm  # noqa: F401  (re-exported as part of the API)

from .errors import EffortError

DEFAULT_WORK_UNITS = 20_000_000
TRIAL_DIVISION_LIMIT = 1_000_000

_RHO_BLOCK = 128


@dataclass
class Budget:
    """Abstract work meter; one unit is roughly one Pollard-rho iteration.

    A shared Budget threads through an operation so that callers can bound
    and report effort deterministically (never wall-clock).
    """

    limit: int = DEFAULT_WORK_UNITS
    spent: int = 0

    @property
    def remaining(self) -> int:
        return self.limit - self.spent

    def charge(self, units: int) -> None:
        """Consume units, raising EffortError once the limit is exceeded."""
        self.spent += units
        if self.spent > self.limit:
            raise EffortError(
                f"work budget exhausted ({self.spent} of {self.limit} units)"
            )

    def try_charge(self, units: int) -> bool:
        """Like charge() but returns False instead of raising."""
        if self.spent + units > self.limit:
            return False
        self.spent += units
        return True


def pow_mod(base: int, exponent: int, modulus: int) -> int:
    """base**exponent mod modulus for nonnegative exponent, modulus >= 2."""
    if modulus < 2:
        raise ValueError("modulus must be >= 2")
    if exponent < 0:
        raise ValueError("exponent must be nonnegative")
    return pow(base, exponent, modulus)


# Smallest strong pseudoprime to the listed bases exceeds the bound, so each
# rung is a deterministic primality test below its bound.
_MR_LADDER = (
    (2_047, (2,)),
    (1_373_653, (2, 3)),
    (9_080_191, (31, 73)),
    (25_326_001, (2, 3, 5)),
    (3_215_031_751, (2, 3, 5, 7)),
    (4_759_123_141, (2, 7, 61)),
    (1_122_004_669_633, (2, 13, 23, 1662803)),
    (2_152_302_898_747, (2, 3, 5, 7, 11)),
    (3_474_749_660_383, (2, 3, 5, 7, 11, 13)),
    (341_550_071_728_321, (2, 3, 5, 7, 11, 13, 17)),
    (3_825_123_056_546_413_051, (2, 3, 5, 7, 11, 13, 17, 19, 23)),
    (1 << 64, (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)),
)

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

PROBABLE_PRIME_THRESHOLD = 1 << 64


def _mr_witness(n: int, a: int, d: int, s: int) -> bool:
    """True if n passes one Miller-Rabin round at base a (n-1 = d * 2**s)."""
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def _jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd n > 0."""
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _strong_lucas_prp(n: int) -> bool:
    """Strong Lucas probable-prime test with Selfridge's parameter choice.

    Assumes n is odd, > 5, not a perfect square and has no tiny factors.
    """
    d = 5
    while _jacobi(d, n) != -1:
        d = -(d + 2) if d > 0 else -(d - 2)
    q = (1 - d) // 4

    def half(x):
        return (x + n if x & 1 else x) >> 1

    k = n + 1
    s = (k & -k).bit_length() - 1
    d0 = k >> s
    u, v, qk = 1, 1, q % n
    for bit in bin(d0)[3:]:
        u = u * v % n
        v = (v * v - 2 * qk) % n
        qk = qk * qk % n
        if bit == "1":
            u, v = half((u + v) % n), half((d * u + v) % n)
            qk = qk * q % n
    if u == 0 or v == 0:
        return True
    for _ in range(s - 1):
        v = (v * v - 2 * qk) % n
        if v == 0:
            return True
        qk = qk * qk % n
    return False


def is_prime(n: int) -> bool:
    """Primality test: deterministic below 2**64, Baillie-PSW style above.

    Above 2**64 no counterexample to the combined test is known; callers
    that surface verdicts for such n should label them probable.
    """
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    if n < PROBABLE_PRIME_THRESHOLD:
        for bound, bases in _MR_LADDER:
            if n < bound:
                return all(_mr_witness(n, a, d, s) for a in bases)
    if not _mr_witness(n, 2, d, s):
        return False
    r = math.isqrt(n)
    if r * r == n:
        return False
    return _strong_lucas_prp(n)


@lru_cache(maxsize=4)
def _primes_below(limit: int) -> tuple[int, ...]:
    sieve = bytearray(b"\x01") * limit
    sieve[:2] = b"\x00\x00"
    for p in range(2, math.isqrt(limit - 1) + 1):
        if sieve[p]:
            start = p * p
            sieve[start::p] = b"\x00" * ((limit - 1 - start) // p + 1)
    return tuple(i for i, flag in enumerate(sieve) if flag)


def small_primes() -> tuple[int, ...]:
    """Primes below the trial-division limit, cached."""
    return _primes_below(TRIAL_DIVISION_LIMIT)


@dataclass(frozen=True)
class Factorization:
    """Multiset of (prime, exponent) pairs plus a completeness flag.

    Invariants: factors are sorted by prime, every listed prime is prime,
    and product(p**e) * unfactored_cofactor == value.  complete is True
    iff unfactored_cofactor == 1.
    """

    value: int
    factors: tuple[tuple[int, int], ...]
    complete: bool
    unfactored_cofactor: int = 1

    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    @property
    def big_omega(self) -> int:
        """Number of listed prime factors counted with multiplicity."""
        return sum(e for _, e in self.factors)

    def rebuild(self) -> int:
        out = self.unfactored_cofactor
        for p, e in self.factors:
            out *= p**e
        return out

    def divisors(self) -> list[int]:
        """All divisors of value, ascending; requires a complete factorization."""
        if not self.complete:
            raise ValueError("divisors need a complete factorization")
        divs = [1]
        for p, e in self.factors:
            pk = 1
            ext = []
            for _ in range(e):
                pk *= p
                ext.extend(d * pk for d in divs)
            divs.extend(ext)
        return sorted(divs)


def _rho_brent(n: int, budget: Budget) -> int | None:
    """Brent-cycle Pollard rho with deterministic parameters.

    Returns a nontrivial factor of composite n, or None once the budget
    is exhausted.  Polynomial constants are tried in a fixed order so the
    outcome never depends on randomness.
    """
    c = 1
    while True:
        y, r, q, g = 2, 1, 1, 1
        while g == 1:
            x = y
            if not budget.try_charge(r):
                return None
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                block = min(_RHO_BLOCK, r - k)
                if not budget.try_charge(block):
                    return None
                for _ in range(block):
                    y = (y * y + c) % n
                    q = q * (x - y) % n
                g = gcd(q, n)
                k += block
            r <<= 1
        if g != n:
            return g
        # the batched gcd overshot; replay one step at a time
        g = 1
        while g == 1:
            if not budget.try_charge(1):
                return None
            ys = (ys * ys + c) % n
            g = gcd(x - ys, n)
        if g != n:
            return g
        c += 1


def factorize(n: int, budget: Budget | None = None,
              *, trial_limit: int = TRIAL_DIVISION_LIMIT) -> Factorization:
    """Factor n >= 1; budget exhaustion yields an incomplete result, not an error.

    Trial division runs up to trial_limit, then Brent's rho splits what is
    left while the budget lasts.  Composite leftovers land multiplied into
    unfactored_cofactor.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if budget is None:
        budget = Budget()
    if n == 1:
        return Factorization(1, (), True)

    found: dict[int, int] = {}
    m = n
    if not is_prime(m):
        for p in small_primes():
            if p > trial_limit or p * p > m:
                break
            if m % p:
                continue
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            found[p] = e
            if m == 1 or is_prime(m):
                break
        else:
            p = trial_limit
        if m > 1 and not is_prime(m) and p * p > m:
            # no factor up to sqrt(m) remains, so m is prime; unreachable in
            # practice because of the is_prime checks above
            found[m] = found.get(m, 0) + 1
            m = 1

    unfactored = 1
    stack = [m] if m > 1 else []
    while stack:
        c = stack.pop()
        if is_prime(c):
            found[c] = found.get(c, 0) + 1
            continue
        d = _rho_brent(c, budget)
        if d is None:
            unfactored *= c
            continue
        stack.append(d)
        stack.append(c // d)

    factors = tuple(sorted(found.items()))
    return Factorization(n, factors, unfactored == 1, unfactored)

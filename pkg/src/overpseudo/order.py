"""Multiplicative orders and cyclotomic-coset decompositions for odd moduli."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm

from .arith import Budget, Factorization, factorize
from .errors import EffortError

DIRECT_ENUMERATION_LIMIT = 1_000_000

# order of `base` mod p keyed by (base mod p, p); factored p-1 keyed by p
_unit_order_cache: dict[tuple[int, int], int] = {}
_lambda_cache: dict[int, tuple[tuple[int, int], ...]] = {}


def _validate(base: int, modulus: int) -> None:
    if modulus < 1 or modulus % 2 == 0:
        raise ValueError("modulus must be odd and positive")
    if base < 1:
        raise ValueError("base must be positive")
    if gcd(base, modulus) != 1:
        raise ValueError(f"base {base} shares a factor with modulus {modulus}")


def _prime_unit_order(base: int, p: int, budget: Budget) -> int:
    """Order of base modulo prime p, by stripping prime factors from p - 1."""
    b = base % p
    if b == 1:
        return 1
    key = (b, p)
    cached = _unit_order_cache.get(key)
    if cached is not None:
        return cached
    lam = _lambda_cache.get(p)
    if lam is None:
        fz = factorize(p - 1, budget)
        if not fz.complete:
            raise EffortError(f"cannot factor {p} - 1 to derive an order")
        lam = fz.factors
        _lambda_cache[p] = lam
    t = p - 1
    for f, _ in lam:
        while t % f == 0 and pow(b, t // f, p) == 1:
            t //= f
    _unit_order_cache[key] = t
    return t


def prime_power_order(base: int, p: int, e: int, budget: Budget | None = None) -> int:
    """Order of base modulo p**e for odd prime p coprime to base."""
    if budget is None:
        budget = Budget()
    t = _prime_unit_order(base, p, budget)
    pk = p
    for _ in range(1, e):
        pk *= p
        if pow(base, t, pk) != 1:
            t *= p
    return t


def _prime_power_order_chain(base: int, p: int, e: int, budget: Budget) -> list[int]:
    """Orders of base mod p, p**2, ..., p**e (nondecreasing)."""
    t = _prime_unit_order(base, p, budget)
    chain = [t]
    pk = p
    for _ in range(1, e):
        pk *= p
        if pow(base, t, pk) != 1:
            t *= p
        chain.append(t)
    return chain


def _order_by_stepping(base: int, modulus: int) -> int:
    b = base % modulus
    x, t = b, 1
    while x != 1:
        x = x * b % modulus
        t += 1
    return t


def mult_order(base: int, modulus: int, *, budget: Budget | None = None,
               factorization: Factorization | None = None) -> int:
    """Least t >= 1 with base**t == 1 (mod modulus); mult_order(a, 1) == 1.

    Works through the factorization of the modulus so that large prime
    moduli cost a handful of modular exponentiations instead of O(modulus)
    steps.
    """
    _validate(base, modulus)
    if modulus == 1 or base % modulus == 1:
        return 1
    if budget is None:
        budget = Budget()
    fz = factorization if factorization is not None else factorize(modulus, budget)
    if not fz.complete:
        if modulus <= DIRECT_ENUMERATION_LIMIT:
            return _order_by_stepping(base, modulus)
        raise EffortError(f"incomplete factorization of modulus {modulus}")
    h = 1
    for p, e in fz.factors:
        h = lcm(h, prime_power_order(base, p, e, budget))
    return h


def order_dividing(base: int, modulus: int, multiple: int,
                   *, budget: Budget | None = None) -> int:
    """Exact order of base mod modulus given that it divides `multiple`.

    Avoids factoring modulus - 1; used when candidates are known to divide
    2**n - 1 so their order divides n.
    """
    if modulus < 2:
        raise ValueError("modulus must be >= 2")
    if pow(base, multiple, modulus) != 1:
        raise ValueError(f"{multiple} is not a multiple of the order")
    if budget is None:
        budget = Budget()
    fz = factorize(multiple, budget)
    if not fz.complete:
        raise EffortError(f"cannot factor the order multiple {multiple}")
    t = multiple
    for f, _ in fz.factors:
        while t % f == 0 and pow(base, t // f, modulus) == 1:
            t //= f
    return t


@dataclass(frozen=True)
class CosetDecomposition:
    """Orbits of multiplication by `base` on {1, ..., modulus-1}.

    Each coset is sorted ascending and cosets are listed by least element;
    r is the number of cosets and h the lcm of their sizes, which equals
    mult_order(base, modulus).
    """

    modulus: int
    base: int
    cosets: tuple[tuple[int, ...], ...]
    r: int
    h: int


def cyclotomic_cosets(base: int, modulus: int) -> CosetDecomposition:
    """Direct orbit enumeration of the coset partition (O(modulus) memory)."""
    _validate(base, modulus)
    if modulus < 3:
        raise ValueError("modulus must be >= 3")
    if modulus > 100_000_000:
        raise ValueError("modulus too large for direct coset enumeration")
    b = base % modulus
    seen = bytearray(modulus)
    cosets = []
    h = 1
    for s in range(1, modulus):
        if seen[s]:
            continue
        orbit = [s]
        seen[s] = 1
        x = s * b % modulus
        while x != s:
            orbit.append(x)
            seen[x] = 1
            x = x * b % modulus
        orbit.sort()
        cosets.append(tuple(orbit))
        h = lcm(h, len(orbit))
    return CosetDecomposition(modulus, base % modulus, tuple(cosets), len(cosets), h)


def coset_count(base: int, modulus: int, *, budget: Budget | None = None,
                factorization: Factorization | None = None) -> tuple[int, int]:
    """(r, h) without materializing cosets.

    r is the sum over divisors d > 1 of the modulus of phi(d) / ord_d(base);
    every orbit inside the units of Z/d has size ord_d(base), which is why
    the division is exact.  Falls back to direct enumeration for small
    moduli whose factorization did not complete.
    """
    _validate(base, modulus)
    if modulus < 3:
        raise ValueError("modulus must be >= 3")
    if budget is None:
        budget = Budget()
    fz = factorization if factorization is not None else factorize(modulus, budget)
    if not fz.complete:
        if modulus <= DIRECT_ENUMERATION_LIMIT:
            dec = cyclotomic_cosets(base, modulus)
            return dec.r, dec.h
        raise EffortError(f"incomplete factorization of modulus {modulus}")

    # (phi(d), ord_d(base)) for every divisor d, built prime by prime
    divisor_data = [(1, 1)]
    h = 1
    for p, e in fz.factors:
        chain = _prime_power_order_chain(base, p, e, budget)
        h = lcm(h, chain[-1])
        rows = []
        phi, pk = p - 1, 1
        for j in range(e):
            rows.append((phi * pk, chain[j]))
            pk *= p
        divisor_data += [
            (phi0 * phi_j, lcm(o0, o_j))
            for phi0, o0 in divisor_data
            for phi_j, o_j in rows
        ]
    r = 0
    for phi, o in divisor_data[1:]:
        r += phi // o
    return r, h

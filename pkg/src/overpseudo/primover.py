"""Primitive prime divisors of 2**n - 1 and the primover cofactor.

A prime p is a primitive divisor of 2**n - 1 when the multiplicative order
of 2 mod p is exactly n.  The cofactor Pr(2**n - 1) is their product taken
with the multiplicity each prime carries inside 2**n - 1, so Wieferich
squares count fully.  When the cofactor is composite it is called a full
overpseudoprime.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .arith import Budget, factorize, is_prime
from .classify import is_overpseudoprime_criterion, is_overpseudoprime_def
from .errors import ContractViolationError, EffortError
from .order import order_dividing

MERSENNE_PRIME = "prime"
MERSENNE_OVERPSEUDOPRIME = "overpseudoprime"


def _mobius(m: int) -> int:
    fz = factorize(m)
    if any(e > 1 for _, e in fz.factors):
        return 0
    return -1 if len(fz.factors) % 2 else 1


def cyclotomic_value(n: int) -> int:
    """Value of the n-th cyclotomic polynomial at 2, exactly.

    Computed as the product over divisors d of n of (2**d - 1)**mu(n/d);
    numerator and denominator are kept separate and divided once.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return 1
    num = den = 1
    for d in factorize(n).divisors():
        mu = _mobius(n // d)
        if mu == 1:
            num *= (1 << d) - 1
        elif mu == -1:
            den *= (1 << d) - 1
    assert num % den == 0
    return num // den


@dataclass(frozen=True)
class PrimitivePart:
    """Primitive prime powers of 2**n - 1 and their product.

    primitive_factors holds (p, v) with v the p-adic valuation of 2**n - 1.
    cofactor is the product of those prime powers times any unfactored
    remainder; with complete=True it equals Pr(2**n - 1) exactly.
    is_full_overpseudoprime is only asserted for complete results.
    """

    n: int
    primitive_factors: tuple[tuple[int, int], ...]
    cofactor: int
    complete: bool
    unfactored: int
    is_full_overpseudoprime: bool

    def slots(self) -> list[int]:
        """Known primitive primes repeated with multiplicity, ascending."""
        out: list[int] = []
        for p, e in self.primitive_factors:
            out.extend([p] * e)
        return out


def primitive_part(n: int, budget: Budget | None = None) -> PrimitivePart:
    """Extract the primitive prime powers of 2**n - 1 for n >= 2.

    Factors the cyclotomic value at 2 (exponentially smaller than 2**n - 1),
    discards the single intrinsic prime (the largest prime factor of n) when
    it divides, and checks order exactly n for every survivor.  Exponents
    n = 1 and 6 legitimately produce an empty primitive part.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    if budget is None:
        budget = Budget()
    value = cyclotomic_value(n)
    intrinsic = max(factorize(n).primes())
    while value % intrinsic == 0:
        value //= intrinsic
    if value == 1:
        return PrimitivePart(n, (), 1, True, 1, False)
    fz = factorize(value, budget)
    prim = []
    cofactor = fz.unfactored_cofactor
    for p, _ in fz.factors:
        if order_dividing(2, p, n, budget=budget) != n:
            raise ContractViolationError(
                f"prime {p} of the reduced cyclotomic value has order != {n}"
            )
        e = 1
        while pow(2, n, p ** (e + 1)) == 1:
            e += 1
        prim.append((p, e))
        cofactor *= p**e
    omega = sum(e for _, e in prim)
    return PrimitivePart(
        n, tuple(prim), cofactor, fz.complete, fz.unfactored_cofactor,
        fz.complete and omega >= 2,
    )


def check_mersenne_dichotomy(p: int, budget: Budget | None = None) -> str:
    """Classify 2**p - 1 for prime p as "prime" or "overpseudoprime".

    Any other outcome raises ContractViolationError; both overpseudoprime
    routes must agree for the composite case.
    """
    if not is_prime(p):
        raise ValueError("p must be prime")
    if budget is None:
        budget = Budget()
    m = (1 << p) - 1
    if is_prime(m):
        return MERSENNE_PRIME
    fz = factorize(m, budget)
    if not fz.complete:
        raise EffortError(f"cannot factor 2**{p} - 1 within budget")
    by_def = is_overpseudoprime_def(m, budget, factorization=fz)
    by_crit = is_overpseudoprime_criterion(m, budget, factorization=fz)
    if by_def and by_crit:
        return MERSENNE_OVERPSEUDOPRIME
    raise ContractViolationError(
        f"2**{p} - 1 is neither prime nor overpseudoprime "
        f"(definition={by_def}, criterion={by_crit})"
    )


def omega_bound_report(n: int, budget: Budget | None = None) -> tuple[int, float]:
    """(Omega(Pr(2**n - 1)), n / log2(n)) for a full overpseudoprime cofactor."""
    part = primitive_part(n, budget)
    if not part.complete:
        raise EffortError(f"primitive part of 2**{n} - 1 is incomplete")
    if not part.is_full_overpseudoprime:
        raise ValueError(f"Pr(2**{n} - 1) is not composite")
    omega = sum(e for _, e in part.primitive_factors)
    return omega, n / math.log2(n)


def primover_ratio(n: int, budget: Budget | None = None) -> float:
    """ln(2**n - 1) / ln(Pr(2**n - 1)); 1.0 exactly when n is prime.

    Reported as an empirical exponent only; the constant that bounds it is
    not computable here.
    """
    part = primitive_part(n, budget)
    if not part.complete:
        raise EffortError(f"primitive part of 2**{n} - 1 is incomplete")
    if part.cofactor == 1:
        raise ValueError(f"2**{n} - 1 has no primitive prime divisor")
    return math.log((1 << n) - 1) / math.log(part.cofactor)

"""Constructive production of overpseudoprimes.

Two routes: the Aurifeuillian split of 2**(4k+2) + 1 into two coprime
brackets whose primitive divisors multiply into an overpseudoprime of
order 8k + 4, and direct minimization over the primitive prime-power
slots of 2**n - 1 for arbitrary n.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .arith import TRIAL_DIVISION_LIMIT, Budget, Factorization, factorize
from .classify import is_overpseudoprime_def
from .errors import ContractViolationError, EffortError
from .order import order_dividing
from .primover import primitive_part


@dataclass(frozen=True)
class AurifeuillianPair:
    """The two brackets L, M of 2**(4k+2) + 1 = L * M with M - L = 2**(k+2)."""

    k: int
    n: int
    L: int
    M: int

    def __post_init__(self):
        if self.L * self.M != (1 << (4 * self.k + 2)) + 1:
            raise ContractViolationError("bracket product mismatch")
        if self.M - self.L != 1 << (self.k + 2):
            raise ContractViolationError("bracket difference is not 2**(k+2)")
        if gcd(self.L, self.M) != 1:
            raise ContractViolationError("brackets are not coprime")


def aurifeuillian_pair(k: int) -> AurifeuillianPair:
    if k < 1:
        raise ValueError("k must be >= 1")
    half = 1 << (2 * k + 1)
    step = 1 << (k + 1)
    return AurifeuillianPair(k, 8 * k + 4, half - step + 1, half + step + 1)


@dataclass(frozen=True)
class GenerationTrace:
    """Everything the Aurifeuillian construction saw on the way to its result."""

    pair: AurifeuillianPair
    l_factorization: Factorization
    m_factorization: Factorization
    primitive_l: tuple[int, ...]
    primitive_m: tuple[int, ...]
    value: int | None


def generate_trace(k: int, budget: Budget | None = None) -> GenerationTrace:
    """Run the bracket construction and keep the intermediate factorizations.

    The product of the smallest primitive divisor of each bracket is
    verified overpseudoprime before being reported.  For k >= 3 both
    brackets are guaranteed a primitive divisor, so absence raises
    ContractViolationError; for k in {1, 2} absence is reported as a None
    value.
    """
    pair = aurifeuillian_pair(k)
    if budget is None:
        budget = Budget()
    lf = factorize(pair.L, budget)
    mf = factorize(pair.M, budget)
    if not (lf.complete and mf.complete):
        raise EffortError(f"cannot factor the Aurifeuillian brackets for k={k}")
    prim_l = tuple(p for p in lf.primes()
                   if order_dividing(2, p, pair.n, budget=budget) == pair.n)
    prim_m = tuple(p for p in mf.primes()
                   if order_dividing(2, p, pair.n, budget=budget) == pair.n)
    if not (prim_l and prim_m):
        if k >= 3:
            raise ContractViolationError(
                f"a bracket for k={k} lacks a primitive divisor"
            )
        return GenerationTrace(pair, lf, mf, prim_l, prim_m, None)
    value = prim_l[0] * prim_m[0]
    if not is_overpseudoprime_def(value, budget):
        raise ContractViolationError(
            f"constructed value {value} failed the overpseudoprime check"
        )
    return GenerationTrace(pair, lf, mf, prim_l, prim_m, value)


def generate_overpseudoprime(k: int, budget: Budget | None = None) -> int | None:
    """Overpseudoprime of order 8k + 4 from the bracket construction.

    None when k < 3 and a bracket has no primitive divisor.
    """
    return generate_trace(k, budget).value


def least_overpseudoprime_with_order(n: int, budget: Budget | None = None) -> int | None:
    """Smallest overpseudoprime whose order of 2 is exactly n.

    This is the product of the two smallest primitive prime-power slots of
    2**n - 1 (a prime p contributes v_p(2**n - 1) slots).  Returns None when
    fewer than two slots exist, meaning no overpseudoprime has this order.

    With an incomplete factorization the minimum is still returned when it
    is provable: every unknown factor exceeds the trial-division limit, so
    a small enough known product cannot be beaten.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    if budget is None:
        budget = Budget()
    part = primitive_part(n, budget)
    slots = part.slots()
    if part.complete:
        if len(slots) < 2:
            return None
        return slots[0] * slots[1]
    if len(slots) >= 2:
        candidate = slots[0] * slots[1]
        floor = TRIAL_DIVISION_LIMIT
        if candidate <= floor * min(slots[0], floor):
            return candidate
    raise EffortError(
        f"cannot prove the least overpseudoprime of order {n} within budget"
    )

"""Pseudoprime taxonomy for odd numbers.

Covers Fermat and strong pseudoprimes to base 2, super-Poulet numbers,
Carmichael numbers (Korselt criterion), and overpseudoprimality through two
independent routes: the coset-count identity n == r(n) * h(n) + 1, and the
criterion that every prime-power divisor shares one multiplicative order
of 2.  Even, prime, or unit inputs return False from every predicate.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .arith import Budget, Factorization, factorize, is_prime
from .errors import ContractViolationError, EffortError
from .order import _prime_unit_order, coset_count

VERDICT_DEFINITION = "definition"
VERDICT_CRITERION = "criterion"
VERDICT_BOTH = "both"


@dataclass(frozen=True)
class ClassificationFlags:
    """Taxonomy verdicts; None marks a flag left undecided by budget limits."""

    prime: bool | None = None
    fermat_psp_base2: bool | None = None
    strong_psp_base2: bool | None = None
    super_poulet: bool | None = None
    carmichael: bool | None = None
    overpseudoprime_base2: bool | None = None


@dataclass(frozen=True)
class ClassificationReport:
    n: int
    factorization: Factorization
    h: int | None
    r: int | None
    flags: ClassificationFlags
    verdict_basis: str


def is_fermat_psp(n: int, base: int) -> bool:
    """Composite odd n coprime to base with base**(n-1) == 1 (mod n)."""
    if n < 9 or n % 2 == 0 or gcd(base, n) != 1:
        return False
    if pow(base, n - 1, n) != 1:
        return False
    return not is_prime(n)


def is_strong_psp(n: int, base: int) -> bool:
    """Composite odd n passing one Miller-Rabin round at the given base."""
    if n < 9 or n % 2 == 0:
        return False
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    x = pow(base, d, n)
    if x != 1 and x != n - 1:
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return not is_prime(n)


def is_super_poulet(n: int, budget: Budget | None = None,
                    *, factorization: Factorization | None = None) -> bool:
    """Odd composite n whose every divisor d satisfies d | 2**d - 2."""
    if n < 9 or n % 2 == 0:
        return False
    if pow(2, n, n) != 2:
        return False
    if budget is None:
        budget = Budget()
    fz = factorization if factorization is not None else factorize(n, budget)
    if not fz.complete:
        raise EffortError(f"incomplete factorization of {n}")
    if is_prime(n):
        return False
    return all(pow(2, d, d) == 2 for d in fz.divisors() if d > 1)


def is_carmichael(n: int, budget: Budget | None = None,
                  *, factorization: Factorization | None = None) -> bool:
    """Korselt criterion: odd composite, squarefree, (p-1) | (n-1) for all p | n."""
    if n < 9 or n % 2 == 0:
        return False
    if budget is None:
        budget = Budget()
    fz = factorization if factorization is not None else factorize(n, budget)
    if not fz.complete:
        raise EffortError(f"incomplete factorization of {n}")
    if is_prime(n):
        return False
    if any(e > 1 for _, e in fz.factors):
        return False
    return all((n - 1) % (p - 1) == 0 for p, _ in fz.factors)


def is_overpseudoprime_def(n: int, budget: Budget | None = None,
                           *, factorization: Factorization | None = None) -> bool:
    """Definition route: odd composite n with n == r(n) * h(n) + 1 at base 2."""
    if n < 9 or n % 2 == 0:
        return False
    # n == r*h + 1 forces h | n - 1, so failing the Fermat condition settles it
    if pow(2, n - 1, n) != 1:
        return False
    if is_prime(n):
        return False
    if budget is None:
        budget = Budget()
    fz = factorization if factorization is not None else factorize(n, budget)
    r, h = coset_count(2, n, budget=budget, factorization=fz)
    return n == r * h + 1


def is_overpseudoprime_criterion(n: int, budget: Budget | None = None,
                                 *, factorization: Factorization | None = None) -> bool:
    """Criterion route: every prime-power divisor of n has one order of 2.

    Equal orders on the maximal prime powers p**e (checked as ord_p(2) all
    equal to some t with p**e | 2**t - 1) force the order of every divisor
    of n to be t, which is the full sub-product condition.
    """
    if n < 9 or n % 2 == 0:
        return False
    if is_prime(n):
        return False
    if budget is None:
        budget = Budget()
    fz = factorization if factorization is not None else factorize(n, budget)
    if not fz.complete:
        raise EffortError(f"incomplete factorization of {n}")
    t = None
    for p, e in fz.factors:
        tp = _prime_unit_order(2, p, budget)
        if t is None:
            t = tp
        elif tp != t:
            return False
        if pow(2, t, p**e) != 1:
            return False
    return True


def classify(n: int, budget: Budget | None = None) -> ClassificationReport:
    """Full taxonomy for odd n >= 3, cross-checking both overpseudoprime routes.

    Raises EffortError (with a partial report attached) when the
    factorization does not complete, and ContractViolationError if the two
    overpseudoprime routes ever disagree.
    """
    if n < 3 or n % 2 == 0:
        raise ValueError("classify requires an odd n >= 3")
    if budget is None:
        budget = Budget()
    fz = factorize(n, budget)
    prime = is_prime(n)
    fermat = is_fermat_psp(n, 2)
    strong = is_strong_psp(n, 2)
    if not fz.complete:
        partial = ClassificationReport(
            n, fz, None, None,
            ClassificationFlags(prime=prime, fermat_psp_base2=fermat,
                                strong_psp_base2=strong),
            VERDICT_DEFINITION,
        )
        raise EffortError(f"incomplete factorization of {n}", partial=partial)

    r, h = coset_count(2, n, budget=budget, factorization=fz)
    over_def = (not prime) and n == r * h + 1
    over_crit = is_overpseudoprime_criterion(n, budget, factorization=fz)
    if over_def != over_crit:
        raise ContractViolationError(
            f"overpseudoprime routes disagree for {n}: "
            f"definition={over_def}, criterion={over_crit}"
        )
    flags = ClassificationFlags(
        prime=prime,
        fermat_psp_base2=fermat,
        strong_psp_base2=strong,
        super_poulet=is_super_poulet(n, budget, factorization=fz),
        carmichael=is_carmichael(n, budget, factorization=fz),
        overpseudoprime_base2=over_def,
    )
    return ClassificationReport(n, fz, h, r, flags, VERDICT_BOTH)

"""Exhaustive enumeration of overpseudoprimes below a bound.

Every overpseudoprime m <= x factors into primes sharing one order h of 2,
and its least prime factor is at most sqrt(x), so h is the order of some
prime below sqrt(x).  The sweep therefore sieves primes up to sqrt(x),
groups them by order, extends each order along the progression q = 1
(mod h) capped by both x / p_min(h) and 2**h - 1, admits prime powers
q**i dividing 2**h - 1, and emits every product of at least two slots.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass

from .arith import Budget, factorize, is_prime
from .errors import EffortError
from .order import _prime_unit_order

MEMBER_CAP = 1_000_000


def _primes_upto(limit: int) -> list[int]:
    if limit < 2:
        return []
    sieve = bytearray(b"\x01") * (limit + 1)
    sieve[:2] = b"\x00\x00"
    for p in range(2, math.isqrt(limit) + 1):
        if sieve[p]:
            start = p * p
            sieve[start::p] = b"\x00" * ((limit - start) // p + 1)
    return [i for i, flag in enumerate(sieve) if flag]


def _primes_of_order(h: int, limit: int, budget: Budget) -> list[int]:
    """All primes q <= limit with ord_q(2) == h, scanned along q = 1 (mod h)."""
    if h < 2:
        return []
    if h <= 63:
        limit = min(limit, (1 << h) - 1)
    # candidates must be odd: steps of 2h when h is odd, h when even
    start, step = (2 * h + 1, 2 * h) if h % 2 else (h + 1, h)
    if limit < start:
        return []
    budget.charge((limit - start) // step + 1)
    h_primes = factorize(h, budget).primes()
    out = []
    for q in range(start, limit + 1, step):
        if pow(2, h, q) != 1:
            continue
        if is_prime(q) and all(pow(2, h // f, q) != 1 for f in h_primes):
            out.append(q)
    return out


def _slots_of_order(h: int, primes: list[int], x: int) -> list[tuple[int, int]]:
    """Cap each prime's exponent at its admissible power q**i | 2**h - 1, q**i <= x."""
    slots = []
    for q in primes:
        e, nq = 1, q * q
        while nq <= x and pow(2, h, nq) == 1:
            e += 1
            nq *= q
        slots.append((q, e))
    return slots


def _products(slots: list[tuple[int, int]], x: int) -> list[int]:
    """All products <= x of at least two slots (primes ascending, capped exponents)."""
    out: list[int] = []

    def rec(i: int, prod: int, omega: int) -> None:
        if omega >= 2:
            out.append(prod)
        for j in range(i, len(slots)):
            q, emax = slots[j]
            if prod * q > x:
                break
            v = prod
            for a in range(1, emax + 1):
                v *= q
                if v > x:
                    break
                rec(j + 1, v, omega + a)

    rec(0, 1, 0)
    return sorted(out)


def _enumerate_groups(x: int, budget: Budget, *, only_order: int | None = None,
                      max_order: int | None = None) -> dict[int, list[int]]:
    """Members grouped by order h; orders processed ascending for determinism."""
    if x < 3:
        raise ValueError("x must be >= 3")
    root = math.isqrt(x)
    if only_order is not None:
        h = only_order
        seeds = _primes_of_order(h, root, budget)
        order_min = {h: seeds[0]} if seeds else {}
    else:
        order_min = {}
        for p in _primes_upto(root):
            if p == 2:
                continue
            h = _prime_unit_order(2, p, budget)
            if (max_order is None or h <= max_order) and h not in order_min:
                order_min[h] = p
    groups: dict[int, list[int]] = {}
    for h in sorted(order_min):
        try:
            qs = _primes_of_order(h, x // order_min[h], budget)
            prods = _products(_slots_of_order(h, qs, x), x)
        except EffortError as exc:
            raise EffortError(
                f"{exc}; orders below {h} were completed: {sorted(groups)}"
            ) from exc
        if prods:
            groups[h] = prods
    return groups


def enumerate_overpseudoprimes(x: int, budget: Budget | None = None) -> list[int]:
    """Exactly the overpseudoprimes <= x, sorted ascending."""
    if budget is None:
        budget = Budget()
    groups = _enumerate_groups(x, budget)
    return sorted(m for members in groups.values() for m in members)


@dataclass(frozen=True)
class CountRecord:
    """Ov(x) with its x**(3/4) envelope and the per-order breakdown."""

    x: int
    ov: int
    bound: float
    ratio: float
    by_order: dict[int, int]
    members: tuple[int, ...] | None


def ov_count(x: int, budget: Budget | None = None,
             *, members_cap: int = MEMBER_CAP) -> CountRecord:
    if budget is None:
        budget = Budget()
    groups = _enumerate_groups(x, budget)
    members = sorted(m for lst in groups.values() for m in lst)
    ov = len(members)
    bound = float(x) ** 0.75
    return CountRecord(
        x, ov, bound, ov / bound,
        {h: len(groups[h]) for h in sorted(groups)},
        tuple(members) if ov <= members_cap else None,
    )


def ov_count_by_order(x: int, n: int, budget: Budget | None = None) -> int:
    """Number of overpseudoprimes m <= x with order of 2 exactly n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if budget is None:
        budget = Budget()
    groups = _enumerate_groups(x, budget, only_order=n)
    return len(groups.get(n, []))


def ov_count_upto_order(x: int, n: int, budget: Budget | None = None) -> int:
    """Number of overpseudoprimes m <= x whose order of 2 is at most n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if budget is None:
        budget = Budget()
    groups = _enumerate_groups(x, budget, max_order=n)
    return sum(len(v) for v in groups.values())


@dataclass(frozen=True)
class BoundRow:
    x: int
    ov: int
    x_3_4: float
    ratio: float
    x_1_2: float


def bound_report(xs, budget: Budget | None = None) -> list[BoundRow]:
    """One row per x: Ov(x) against x**(3/4), with the x**(1/2) reference column.

    xs must be ascending; a single enumeration at the largest x serves all
    rows.
    """
    xs = list(xs)
    if not xs:
        raise ValueError("xs must be nonempty")
    if any(b <= a for a, b in zip(xs, xs[1:])):
        raise ValueError("xs must be strictly ascending")
    if budget is None:
        budget = Budget()
    members = enumerate_overpseudoprimes(xs[-1], budget)
    rows = []
    for x in xs:
        ov = bisect_right(members, x)
        b = float(x) ** 0.75
        rows.append(BoundRow(x, ov, b, ov / b, float(x) ** 0.5))
    return rows


def bound_report_csv(rows: list[BoundRow]) -> str:
    """CSV with header x,ov,x_3_4,ratio,x_1_2 and six fractional digits."""
    lines = ["x,ov,x_3_4,ratio,x_1_2"]
    for row in rows:
        lines.append(
            f"{row.x},{row.ov},{row.x_3_4:.6f},{row.ratio:.6f},{row.x_1_2:.6f}"
        )
    return "\n".join(lines) + "\n"

"""Exact combinatorial primitives and the binomial-sum identities used by the
closed forms.

Everything here is a plain function of Python ints; counts are arbitrary
precision and there is no floating point anywhere.
"""
from __future__ import annotations

import math
from functools import lru_cache

__all__ = [
    "binom",
    "monus",
    "stirling2",
    "lemma_sum_check",
    "lemma_min_sums_check",
    "lemma_double_min_check",
    "lemma_other_min_check",
    "lemma_grid",
]


def binom(n: int, k: int) -> int:
    """C(n, k), with C(n, k) = 0 whenever k < 0 or n < k.

    The zero convention lets shifted summation indices truncate on their own.
    """
    if k < 0 or n < k:
        return 0
    return math.comb(n, k)


def monus(a: int, b: int) -> int:
    """Truncated subtraction max(a - b, 0)."""
    return a - b if a > b else 0


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind S(n, k)."""
    if n < 0 or k < 0:
        raise ValueError("stirling2 takes nonnegative arguments")
    if n == k:
        return 1
    if n == 0 or k == 0:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def _require_r_below_q(q: int, r: int) -> None:
    if r >= q:
        raise ValueError(f"identity requires r < q, got r={r}, q={q}")


def lemma_sum_check(q: int, n: int) -> tuple[bool, bool]:
    """Check both weighted column-sum identities by direct summation.

    sum_{j=0}^{q-1} j C(j+n-1, n-1) = n C(q+n-1, n+1)
    sum_{j=1}^{q}   j C(q-j+n-1, n-1) = C(q+n, n+1)
    """
    lhs1 = sum(j * binom(j + n - 1, n - 1) for j in range(q))
    lhs2 = sum(j * binom(q - j + n - 1, n - 1) for j in range(1, q + 1))
    return lhs1 == n * binom(q + n - 1, n + 1), lhs2 == binom(q + n, n + 1)


def lemma_min_sums_check(q: int, r: int, n: int) -> tuple[bool, bool, bool]:
    """Check the three sums of min(r+1, q-j) over j = 1..q-1 (plain, and
    weighted by C(q-1-j+n-1, n-1) and by C(q-1-j+n-1, n))."""
    _require_r_below_q(q, r)
    js = range(1, q)
    mins = [min(r + 1, q - j) for j in js]

    plain = sum(mins)
    ok_plain = (
        plain == (q - 1) * (r + 1) - binom(r + 1, 2)
        and plain == q * (r + 1) - binom(r + 2, 2)
    )

    w1 = sum(mn * binom(q - 1 - j + n - 1, n - 1) for mn, j in zip(mins, js))
    ok_w1 = w1 == (r + 1) * binom(q + n - 2, n) - binom(r + n, n + 1)

    w2 = sum(mn * binom(q - 1 - j + n - 1, n) for mn, j in zip(mins, js))
    ok_w2 = w2 == (
        (r + 1) * binom(q + n - 2, n + 1)
        - (r - 1) * binom(r + n - 1, n + 1)
        + (n + 1) * binom(r + n - 1, n + 2)
    )
    return ok_plain, ok_w1, ok_w2


def lemma_double_min_check(q: int) -> bool:
    """sum_{j=1}^{q-1} sum_{i=0}^{q-1} min(q-i, q-j) = 2 C(q+1, 3)."""
    total = sum(min(q - i, q - j) for j in range(1, q) for i in range(q))
    return total == 2 * binom(q + 1, 3)


def lemma_other_min_check(q: int, r: int) -> tuple[bool, bool]:
    """Double sums of min(r-i+1, q-j) over i = 0..r, with j starting at 1
    and at 0 respectively."""
    _require_r_below_q(q, r)
    from_one = sum(min(r - i + 1, q - j) for i in range(r + 1) for j in range(1, q))
    from_zero = from_one + sum(min(r - i + 1, q) for i in range(r + 1))
    return (
        from_one == q * binom(r + 2, 2) - binom(r + 3, 3),
        from_zero == q * binom(r + 2, 2) - binom(r + 2, 3),
    )


def lemma_grid(max_q: int = 30, max_n: int = 6) -> list[tuple]:
    """Run every identity over 1 <= q <= max_q, 1 <= n <= max_n, 0 <= r < q
    (and q = 0 for the double-min sum).  Returns the failing cases."""
    failures = []
    if not lemma_double_min_check(0):
        failures.append(("double_min", 0))
    for q in range(1, max_q + 1):
        if not lemma_double_min_check(q):
            failures.append(("double_min", q))
        for r in range(q):
            if not all(lemma_other_min_check(q, r)):
                failures.append(("other_min", q, r))
        for n in range(1, max_n + 1):
            if not all(lemma_sum_check(q, n)):
                failures.append(("sum", q, n))
            for r in range(q):
                if not all(lemma_min_sums_check(q, r, n)):
                    failures.append(("min_sums", q, r, n))
    return failures

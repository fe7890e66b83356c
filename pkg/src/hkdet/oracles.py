"""Independent ground truth for the staircase counts.

Two routes that share nothing with the first-column recursion:

* ``brute_count`` enumerates exponent matrices directly;
* ``segre_length`` counts through the Segre-product picture, where a
  monomial of k[X]/I_2(X) is a pair (row-sum vector, column-sum vector) of
  equal total degree.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Sequence

from .binomial import binom
from .budget import DEFAULT_STATE_BUDGET, BudgetExceeded, budget
from .counting import INF, CountQuery, count, hilbert_kunz

__all__ = [
    "is_staircase",
    "satisfies_row_or_col",
    "brute_count",
    "alpha",
    "alpha_bounded",
    "segre_length",
    "battery_queries",
    "BatteryResult",
    "brute_battery",
    "segre_battery",
]

ExponentMatrix = Sequence[Sequence[int]]


def is_staircase(p: ExponentMatrix) -> bool:
    """True iff no two nonzero cells sit in strict NW-SE position."""
    support = [(i, j) for i, row in enumerate(p) for j, e in enumerate(row) if e]
    return not any(a < c and b < d for a, b in support for c, d in support)


def satisfies_row_or_col(p: ExponentMatrix, q: int) -> bool:
    """True iff all row sums are < q or all column sums are < q."""
    if all(sum(row) < q for row in p):
        return True
    ncols = len(p[0]) if p else 0
    return all(sum(row[j] for row in p) < q for j in range(ncols))


def brute_count(query: CountQuery, state_budget: int | None = None) -> int:
    """Count admissible matrices by exhaustive search.

    Entries never exceed q - 1: the row-or-column condition makes every line
    of one family sum to < q, and each entry is bounded by both of its line
    sums.  So the search space is {0..q-1}^(m*n), filled row-major.
    """
    m, n, q = query.m, query.n, query.q
    if m < 1 or n < 1:
        raise ValueError("brute_count needs m, n >= 1")
    limit = budget(DEFAULT_STATE_BUDGET) if state_budget is None else state_budget
    if q ** (m * n) > limit:
        raise BudgetExceeded(f"{q}^({m}*{n}) states exceed the budget {limit}")
    rows, cols = query.rows, query.cols
    if any(b < 0 for b in rows) or any(b < 0 for b in cols):
        return 0

    row_sums = [0] * m
    col_sums = [0] * n

    def leaf() -> int:
        if all(s < q for s in row_sums) or all(s < q for s in col_sums):
            return 1
        return 0

    def fill(i: int, j: int, west_limit: int) -> int:
        # west_limit: smallest column holding a nonzero entry in rows < i.
        # A nonzero at (i, j) with j > west_limit would have that entry NW of it.
        if j == n:
            nxt = west_limit
            for jj in range(n):
                if grid_row[i][jj]:
                    nxt = min(nxt, jj)
                    break
            if i + 1 == m:
                return leaf()
            return fill(i + 1, 0, nxt)
        total = 0
        top = 0 if j > west_limit else q - 1
        for e in range(top + 1):
            if row_sums[i] + e > rows[i] or col_sums[j] + e > cols[j]:
                break
            grid_row[i][j] = e
            row_sums[i] += e
            col_sums[j] += e
            total += fill(i, j + 1, west_limit)
            row_sums[i] -= e
            col_sums[j] -= e
        grid_row[i][j] = 0
        return total

    grid_row = [[0] * n for _ in range(m)]
    return fill(0, 0, n)


def alpha(m: int, d: int) -> int:
    """Number of monomials of degree d in m variables."""
    return binom(d + m - 1, m - 1)


def alpha_bounded(m: int, d: int, q: int) -> int:
    """Monomials of degree d in m variables with every exponent < q
    (inclusion-exclusion over the variables whose exponent reaches q)."""
    return sum(
        (-1) ** k * binom(m, k) * binom(d - k * q + m - 1, m - 1) for k in range(m + 1)
    )


def segre_length(m: int, n: int, q: int) -> int:
    """Length via degree-by-degree counting in the Segre product.

    The three sums keep their own upper limits, (q-1)n for the first and
    (q-1)m for the other two; outside those ranges the bounded factor is 0.
    """
    first = sum(alpha(m, d) * alpha_bounded(n, d, q) for d in range((q - 1) * n + 1))
    second = sum(alpha(n, d) * alpha_bounded(m, d, q) for d in range((q - 1) * m + 1))
    both = sum(
        alpha_bounded(n, d, q) * alpha_bounded(m, d, q) for d in range((q - 1) * m + 1)
    )
    return first + second - both


def battery_queries(m: int, n: int, q: int, rng: random.Random, n_random: int = 50) -> list[CountQuery]:
    """Bound patterns used to compare the recursion against ``brute_count``.

    All-INF, all-(q-1), every single bound set to 0, 1 or q-1 with the rest
    INF, and ``n_random`` vectors drawn from {0, ..., q-1, INF}.
    """
    out = [CountQuery.unbounded(m, n, q), CountQuery(m, n, q, (q - 1,) * m, (q - 1,) * n)]
    for value in sorted({0, 1, q - 1}):
        for i in range(m):
            rows = tuple(value if k == i else INF for k in range(m))
            out.append(CountQuery(m, n, q, rows, (INF,) * n))
        for j in range(n):
            cols = tuple(value if k == j else INF for k in range(n))
            out.append(CountQuery(m, n, q, (INF,) * m, cols))
    choices = list(range(q)) + [INF]
    for _ in range(n_random):
        rows = tuple(rng.choice(choices) for _ in range(m))
        cols = tuple(rng.choice(choices) for _ in range(n))
        out.append(CountQuery(m, n, q, rows, cols))
    return out


@dataclass
class BatteryResult:
    name: str
    checked: int = 0
    mismatches: list[tuple] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches


def check_battery_budget(max_mn: int, max_q: int, state_budget: int | None = None) -> None:
    limit = budget(DEFAULT_STATE_BUDGET) if state_budget is None else state_budget
    if max_q ** (max_mn * max_mn) > limit:
        raise BudgetExceeded(
            f"brute-force grid up to {max_mn}x{max_mn}, q={max_q} exceeds the budget {limit}"
        )


def brute_battery(max_mn: int, max_q: int, seed: int = 0, n_random: int = 50) -> BatteryResult:
    """Recursion vs exhaustive enumeration over m, n <= max_mn, q <= max_q."""
    check_battery_budget(max_mn, max_q)
    rng = random.Random(seed)
    result = BatteryResult("brute")
    for m in range(1, max_mn + 1):
        for n in range(1, max_mn + 1):
            for q in range(1, max_q + 1):
                for query in battery_queries(m, n, q, rng, n_random):
                    result.checked += 1
                    fast, slow = count(query), brute_count(query)
                    if fast != slow:
                        result.mismatches.append((query, fast, slow))
    return result


def segre_battery(max_mn: int, max_q: int) -> BatteryResult:
    """Recursion vs the Segre degree-sum formula on unbounded counts."""
    result = BatteryResult("segre")
    for m in range(1, max_mn + 1):
        for n in range(1, max_mn + 1):
            for q in range(1, max_q + 1):
                result.checked += 1
                fast, formula = hilbert_kunz(m, n, q), segre_length(m, n, q)
                if fast != formula:
                    result.mismatches.append(((m, n, q), fast, formula))
    return result

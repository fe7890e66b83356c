"""Bounded staircase-monomial counts N_q(m, n; r_1..r_m; c_1..c_n).

N_q counts m x n exponent matrices p whose support has no two cells in
strict northwest-southeast position, with

* row sums sum_j p[i][j] <= r_i and column sums sum_i p[i][j] <= c_j, and
* either every row sum < q or every column sum < q.

With all bounds infinite this is the length of k[X]/(I_2(X) + (x_ij^q)),
i.e. the Hilbert-Kunz function of the 2x2 determinantal ring.

The count is computed by peeling off the first column: either it is zero,
or some smallest row i has p[i][0] = j > 0, and the remaining mass splits
into the first column below row i and the block of rows 1..i, columns 2..n.
Three blocks distinguish whether the first column or row i reaches q.
"""
from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from typing import Sequence, Union

from .binomial import binom, monus

__all__ = [
    "INF",
    "Bound",
    "CountQuery",
    "canonical_key",
    "count",
    "count_bounds",
    "hilbert_kunz",
    "clear_cache",
    "cache_size",
]

INF = math.inf

# An int or INF.  Negative finite values only show up transiently and make
# the count zero.
Bound = Union[int, float]


def _check_bound(b: Bound) -> Bound:
    if b == INF:
        return INF
    if isinstance(b, bool) or not isinstance(b, int):
        raise TypeError(f"bound must be an int or INF, got {b!r}")
    return b


@dataclass(frozen=True)
class CountQuery:
    """One N_q value: shape, q, and the row/column caps."""

    m: int
    n: int
    q: int
    rows: tuple[Bound, ...]
    cols: tuple[Bound, ...]

    def __post_init__(self):
        if self.q < 1:
            raise ValueError(f"q must be positive, got {self.q}")
        if self.m < 0 or self.n < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        object.__setattr__(self, "rows", tuple(_check_bound(b) for b in self.rows))
        object.__setattr__(self, "cols", tuple(_check_bound(b) for b in self.cols))
        if len(self.rows) != self.m:
            raise ValueError(f"expected {self.m} row bounds, got {len(self.rows)}")
        if len(self.cols) != self.n:
            raise ValueError(f"expected {self.n} column bounds, got {len(self.cols)}")

    @classmethod
    def unbounded(cls, m: int, n: int, q: int) -> "CountQuery":
        return cls(m, n, q, (INF,) * m, (INF,) * n)

    def transpose(self) -> "CountQuery":
        return CountQuery(self.n, self.m, self.q, self.cols, self.rows)


def canonical_key(query: CountQuery) -> tuple | None:
    """Memo key for ``query``, or None when the count is trivially 0 or 1.

    Transposes so that m <= n and replaces finite caps that can never bind by
    INF.  Every admissible matrix has all rows < q or all columns < q, so each
    entry is at most q - 1 and a row sum is at most n(q - 1); likewise a
    column sum is at most m(q - 1).  Bound order is kept: the staircase
    condition is not invariant under permuting rows or columns.
    """
    return _canon(query.m, query.n, query.q, query.rows, query.cols)


def _canon(m, n, q, rows, cols):
    if m > n:
        m, n, rows, cols = n, m, cols, rows
    row_cap = n * (q - 1)
    col_cap = m * (q - 1)
    rows = tuple(INF if b > row_cap else b for b in rows)
    cols = tuple(INF if b > col_cap else b for b in cols)
    return (m, n, q, rows, cols)


_cache: dict[tuple, int] = {}
_cache_lock = threading.Lock()


def clear_cache() -> None:
    with _cache_lock:
        _cache.clear()


def cache_size() -> int:
    return len(_cache)


def _n(m: int, n: int, q: int, rows: tuple, cols: tuple) -> int:
    """N_q(m, n; rows; cols) without argument validation."""
    for b in rows:
        if b < 0:
            return 0
    for b in cols:
        if b < 0:
            return 0
    if m == 0 or n == 0:
        return 1
    key = _canon(m, n, q, rows, cols)
    try:
        return _cache[key]
    except KeyError:
        pass
    m, n, q, rows, cols = key
    if m == 1:
        value = _single_row(q, rows[0], cols)
    else:
        value = _peel_first_column(m, n, q, rows, cols)
    # Values are deterministic, so a racing duplicate write is harmless.
    with _cache_lock:
        _cache[key] = value
    return value


def _single_row(q: int, r: Bound, cols: tuple) -> int:
    """1 x n case.  Each entry is below q, at most its column cap, and the
    entries sum to at most r."""
    n = len(cols)
    if r == INF:
        out = 1
        for c in cols:
            out *= min(c + 1, q)
        return out
    if r < q and all(r <= c for c in cols):
        return binom(r + n, n)
    if n == 1:
        return min(r + 1, cols[0] + 1, q)
    # Outer loop of the nested sum; the inner sums are the same count on the
    # remaining columns with the row budget reduced.
    rest = cols[1:]
    return sum(_n(1, n - 1, q, (r - i,), rest) for i in range(min(cols[0], r, q - 1) + 1))


def _peel_first_column(m: int, n: int, q: int, rows: tuple, cols: tuple) -> int:
    c1 = cols[0]
    rest = cols[1:]
    rest_below_q = tuple(min(c, q - 1) for c in rest)
    c1_below_q = min(c1, q - 1)

    # First column entirely zero.
    total = _n(m, n - 1, q, rows, rest)

    for i in range(1, m + 1):
        r_i = rows[i - 1]
        r_i_below_q = min(r_i, q - 1)
        above = rows[: i - 1]
        above_below_q = tuple(min(r, q - 1) for r in above)
        below = rows[i:]
        for j in range(1, r_i_below_q + 1):
            # Column 1 reaches q: every row must stay below q.
            if i <= m - 1:
                col_reaches_q = monus(
                    _n(m - i, 1, q, below, (c1 - j,)),
                    _n(m - i, 1, q, below, (q - 1 - j,)),
                )
                if col_reaches_q:
                    total += col_reaches_q * _n(
                        i, n - 1, q, above_below_q + (r_i_below_q - j,), rest
                    )

            col_below_q = _n(m - i, 1, q, below, (c1_below_q - j,))
            if not col_below_q:
                continue
            # Column 1 below q, row i reaches q: every column must stay below q.
            total += col_below_q * monus(
                _n(i, n - 1, q, above + (r_i - j,), rest_below_q),
                _n(i, n - 1, q, above + (q - 1 - j,), rest_below_q),
            )
            # Column 1 and row i both below q: no further restriction.
            total += col_below_q * _n(i, n - 1, q, above + (r_i_below_q - j,), rest)
    return total


def count(query: CountQuery) -> int:
    """Exact N_q for a validated query."""
    return _n(query.m, query.n, query.q, query.rows, query.cols)


def count_bounds(
    m: int,
    n: int,
    q: int,
    rows: Sequence[Bound] | None = None,
    cols: Sequence[Bound] | None = None,
) -> int:
    """Convenience wrapper: missing bound vectors mean all INF."""
    rows = (INF,) * m if rows is None else tuple(rows)
    cols = (INF,) * n if cols is None else tuple(cols)
    return count(CountQuery(m, n, q, rows, cols))


def hilbert_kunz(m: int, n: int, q: int) -> int:
    """Length of k[X]/(I_2(X) + (x_ij^q)) for a generic m x n matrix X."""
    if m < 1 or n < 1:
        raise ValueError("matrix dimensions must be positive")
    return count(CountQuery.unbounded(m, n, q))

import itertools
import math

import pytest

INF = math.inf


def naive_count(m, n, q, rows=None, cols=None):
    """Straight itertools enumeration over {0..q-1}^(m*n); deliberately shares
    no code with the package."""
    rows = [INF] * m if rows is None else list(rows)
    cols = [INF] * n if cols is None else list(cols)
    total = 0
    for flat in itertools.product(range(q), repeat=m * n):
        p = [flat[i * n:(i + 1) * n] for i in range(m)]
        support = [(i, j) for i in range(m) for j in range(n) if p[i][j]]
        if any(a < c and b < d for a, b in support for c, d in support):
            continue
        rs = [sum(p[i]) for i in range(m)]
        cs = [sum(p[i][j] for i in range(m)) for j in range(n)]
        if any(rs[i] > rows[i] for i in range(m)) or any(cs[j] > cols[j] for j in range(n)):
            continue
        if all(s < q for s in rs) or all(s < q for s in cs):
            total += 1
    return total


@pytest.fixture
def naive():
    return naive_count


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import LEDGER
    except ImportError:
        return
    if LEDGER:
        terminalreporter.section("acceptance criteria")
        for line in LEDGER:
            terminalreporter.write_line(line)

"""Closed forms for the 2 x n counts and the multiplicity formulas.

Each :class:`ClosedFormId` names one bound pattern of N_q(2, n; r_1, r_2;
c_1..c_n); :func:`bound_pattern` gives the matching row/column caps so the
formula can be compared against :func:`hkdet.counting.count`.
"""
from __future__ import annotations

import math
from enum import Enum
from fractions import Fraction

from .binomial import binom, stirling2
from .counting import INF
from .polyfit import RationalPolynomial

__all__ = [
    "ClosedFormId",
    "eval_closed_form",
    "bound_pattern",
    "hk_polynomial_2n",
    "hk_multiplicity_2n",
    "ey_multiplicity",
]


class ClosedFormId(Enum):
    INF_QM1 = "inf_qm1"  # rows (inf, inf), cols all q-1
    INF_R_INF = "inf_r_inf"  # rows (inf, r), cols all inf
    INF_R_QM1 = "inf_r_qm1"  # rows (inf, r), cols all q-1
    HK_2N = "hk_2n"  # everything unbounded
    MULT_2N = "mult_2n"  # leading coefficient of HK_2N
    INF_R_INFQM1 = "inf_r_infqm1"  # rows (inf, r), cols (inf, q-1, ..., q-1)
    QM1_R_QM1 = "qm1_r_qm1"  # rows (q-1, r), cols all q-1
    QM1_R_INF = "qm1_r_inf"  # rows (q-1, r), cols all inf

    @property
    def needs_r(self) -> bool:
        return self not in (ClosedFormId.INF_QM1, ClosedFormId.HK_2N, ClosedFormId.MULT_2N)


def _check(form: ClosedFormId, n: int, q: int, r: int | None) -> None:
    if n < 2:
        raise ValueError(f"{form.name} holds for n >= 2, got n={n}")
    if q < 1:
        raise ValueError(f"q must be positive, got {q}")
    if form.needs_r:
        if r is None:
            raise ValueError(f"{form.name} needs r")
        if r < 0 or r >= q:
            raise ValueError(f"{form.name} needs 0 <= r < q, got r={r}, q={q}")


def _stair_sum(n: int, q: int, r: int) -> int:
    """q C(r+n, n) + sum_{i=1}^{n-1} C(q+i-1, i+1) C(r+n-i, n-i)."""
    return q * binom(r + n, n) + sum(
        binom(q + i - 1, i + 1) * binom(r + n - i, n - i) for i in range(1, n)
    )


def eval_closed_form(form: ClosedFormId, n: int, q: int, r: int | None = None) -> int | Fraction:
    _check(form, n, q, r)
    if form is ClosedFormId.INF_QM1:
        return q ** (n + 1) + (n - 2) * q ** (n - 1) * binom(q, 2)
    if form is ClosedFormId.INF_R_INF:
        return (n - 1) * binom(r + n, n + 1) + (r + 1) * q**n
    if form is ClosedFormId.INF_R_QM1:
        return (r + 1) * q**n - binom(r + n, n + 1)
    if form is ClosedFormId.HK_2N:
        twice = n * q ** (n + 1) - (n - 2) * q**n
        # n q^(n+1) - (n-2) q^n = q^n (n(q-1) + 2) is always even.
        return twice // 2 + n * binom(n + q - 1, n + 1)
    if form is ClosedFormId.MULT_2N:
        return hk_multiplicity_2n(n)
    if form is ClosedFormId.INF_R_INFQM1:
        return q**n * (r + 1)
    if form is ClosedFormId.QM1_R_QM1:
        return _stair_sum(n, q, r) - n * binom(r + n, n + 1)
    if form is ClosedFormId.QM1_R_INF:
        return _stair_sum(n, q, r)
    raise ValueError(f"unknown closed form {form!r}")


def bound_pattern(form: ClosedFormId, n: int, q: int, r: int | None = None):
    """(rows, cols) caps of the count that ``form`` evaluates."""
    qm1 = q - 1
    if form in (ClosedFormId.HK_2N, ClosedFormId.MULT_2N):
        return (INF, INF), (INF,) * n
    if form is ClosedFormId.INF_QM1:
        return (INF, INF), (qm1,) * n
    if form is ClosedFormId.INF_R_INF:
        return (INF, r), (INF,) * n
    if form is ClosedFormId.INF_R_QM1:
        return (INF, r), (qm1,) * n
    if form is ClosedFormId.INF_R_INFQM1:
        return (INF, r), (INF,) + (qm1,) * (n - 1)
    if form is ClosedFormId.QM1_R_QM1:
        return (qm1, r), (qm1,) * n
    if form is ClosedFormId.QM1_R_INF:
        return (qm1, r), (INF,) * n
    raise ValueError(f"unknown closed form {form!r}")


def hk_polynomial_2n(n: int) -> RationalPolynomial:
    """(n q^(n+1) - (n-2) q^n)/2 + n C(q+n-1, n+1), expanded in q.

    C(q+n-1, n+1) is the falling product (q+n-1)(q+n-2)...(q-1) over (n+1)!.
    """
    if n < 2:
        raise ValueError(f"the 2 x n closed form needs n >= 2, got {n}")
    falling = RationalPolynomial.constant(1)
    for shift in range(-1, n):
        falling = falling * RationalPolynomial((shift, 1))
    falling = falling * Fraction(n, math.factorial(n + 1))
    monomials = [Fraction(0)] * (n + 2)
    monomials[n + 1] = Fraction(n, 2)
    monomials[n] = Fraction(-(n - 2), 2)
    return RationalPolynomial(monomials) + falling


def hk_multiplicity_2n(n: int) -> Fraction:
    """n/2 + n/(n+1)!"""
    if n < 2:
        raise ValueError(f"the 2 x n multiplicity needs n >= 2, got {n}")
    return Fraction(n, 2) + Fraction(n, math.factorial(n + 1))


def ey_multiplicity(m: int, n: int) -> Fraction:
    """Stirling-number multiplicity formula, read with d = m + n - 1.

    (n!/d!) S(d, n) - (1/d!) sum_{r=1}^{m-1} sum_{s=1}^{m-r}
    C(m, r+s) C(n, s) (-1)^(m+r) s^d, evaluated literally.  Only the m = 2
    values are known to agree with the counts; see scripts/compare_ey.py.
    """
    if m < 1 or n < 1:
        raise ValueError("matrix dimensions must be positive")
    d = m + n - 1
    d_fact = math.factorial(d)
    correction = sum(
        binom(m, r + s) * binom(n, s) * (-1) ** (m + r) * s**d
        for r in range(1, m)
        for s in range(1, m - r + 1)
    )
    return Fraction(math.factorial(n) * stirling2(d, n), d_fact) - Fraction(correction, d_fact)

"""A small exact Groebner-basis workbench for I_2(X) + (x_ij^q).

Builds the predicted basis (every q-stair monomial plus every 2x2 minor),
checks Buchberger's S-pair criterion, minimality and reducedness under the
row-major lex order x_11 > x_12 > ... > x_mn, and counts standard monomials
as a third route to the Hilbert-Kunz length.

Monomials are dense exponent tuples indexed row-major, so comparing two
tuples with ``<`` is exactly the lex order on monomials.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .budget import DEFAULT_STAIR_BUDGET, DEFAULT_STATE_BUDGET, BudgetExceeded, budget

__all__ = [
    "Monomial",
    "TermPolynomial",
    "DiagonalLexOrder",
    "Configuration",
    "QStair",
    "q_stair_descriptors",
    "generate_q_stairs",
    "minors",
    "reduce",
    "s_polynomial",
    "GroebnerReport",
    "predicted_basis",
    "minimal_q_stairs",
    "verify_groebner",
    "standard_monomial_count",
    "complete_basis",
]

Monomial = tuple  # tuple[int, ...] of length m*n


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def coprime(a: Monomial, b: Monomial) -> bool:
    return not any(x and y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


class TermPolynomial:
    """Sparse polynomial {exponent tuple: Fraction}; zero terms are dropped."""

    __slots__ = ("terms", "nvars")

    def __init__(self, terms: dict | Iterable = (), nvars: int | None = None):
        items = terms.items() if isinstance(terms, dict) else terms
        self.terms: dict[Monomial, Fraction] = {}
        for mono, c in items:
            c = Fraction(c)
            if c:
                self.terms[tuple(mono)] = self.terms.get(tuple(mono), 0) + c
        self.terms = {k: v for k, v in self.terms.items() if v}
        if nvars is None:
            nvars = len(next(iter(self.terms))) if self.terms else 0
        self.nvars = nvars

    @classmethod
    def monomial(cls, mono: Monomial, coeff=1) -> "TermPolynomial":
        return cls({tuple(mono): coeff}, nvars=len(mono))

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def leading_monomial(self) -> Monomial:
        return max(self.terms)

    def leading_coefficient(self) -> Fraction:
        return self.terms[self.leading_monomial()]

    def trailing_monomials(self) -> list[Monomial]:
        lead = self.leading_monomial()
        return sorted((mono for mono in self.terms if mono != lead), reverse=True)

    def __eq__(self, other) -> bool:
        if isinstance(other, TermPolynomial):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        if not self.terms:
            return "TermPolynomial(0)"
        body = " + ".join(f"{c}*{mono}" for mono, c in sorted(self.terms.items(), reverse=True))
        return f"TermPolynomial({body})"

    def add_scaled(self, other: "TermPolynomial", coeff: Fraction, shift: Monomial) -> None:
        """In place: self += coeff * x^shift * other."""
        terms = self.terms
        for mono, c in other.terms.items():
            key = mono_mul(mono, shift)
            value = terms.get(key, 0) + coeff * c
            if value:
                terms[key] = value
            else:
                terms.pop(key, None)

    def copy(self) -> "TermPolynomial":
        out = TermPolynomial(nvars=self.nvars)
        out.terms = dict(self.terms)
        return out


@dataclass(frozen=True)
class DiagonalLexOrder:
    """Lex order with x_11 > x_12 > ... > x_1n > x_21 > ... > x_mn."""

    m: int
    n: int

    @property
    def nvars(self) -> int:
        return self.m * self.n

    def index(self, i: int, j: int) -> int:
        """Position of x_ij (1-based i, j) in an exponent tuple."""
        if not (1 <= i <= self.m and 1 <= j <= self.n):
            raise IndexError(f"x_{i},{j} is outside a {self.m} x {self.n} matrix")
        return (i - 1) * self.n + (j - 1)

    def monomial(self, exponents: dict[tuple[int, int], int]) -> Monomial:
        out = [0] * self.nvars
        for (i, j), e in exponents.items():
            out[self.index(i, j)] += e
        return tuple(out)

    def variable(self, i: int, j: int) -> Monomial:
        return self.monomial({(i, j): 1})

    def has_diagonal_lead(self, minor: TermPolynomial) -> bool:
        """True iff the leading monomial of ``minor`` is x_ab x_a'b' with
        a < a' and b < b'."""
        cells = sorted(divmod(k, self.n) for k, e in enumerate(minor.leading_monomial()) if e)
        if len(cells) != 2 or max(minor.leading_monomial()) != 1:
            return False
        (i1, j1), (i2, j2) = cells
        return i1 < i2 and j1 < j2

    def as_matrix(self, mono: Monomial) -> list[list[int]]:
        return [list(mono[i * self.n : (i + 1) * self.n]) for i in range(self.m)]


class Configuration(Enum):
    ROW_RIGHT_COL_DOWN = "row-right/col-down"
    ROW_LEFT_COL_UP = "row-left/col-up"


@dataclass(frozen=True)
class QStair:
    """One way of writing a q-stair monomial: pivot (c, d), arm shape, and
    the monomial itself."""

    c: int
    d: int
    q: int
    configuration: Configuration
    monomial: Monomial


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All tuples of ``parts`` nonnegative ints summing to ``total``."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def q_stair_descriptors(m: int, n: int, q: int) -> Iterator[QStair]:
    """Every (pivot, configuration, exponents) realising a q-stair monomial.

    Row-right/col-down uses cells (c, j >= d) and (i >= c, d); row-left/col-up
    uses (c, j <= d) and (i <= c, d).  Either way no support cell lies NW of
    another, and row c and column d both sum to q.  Distinct descriptors can
    give the same monomial (e.g. x_cd^q under both shapes).
    """
    if q < 1:
        raise ValueError(f"q must be positive, got {q}")
    order = DiagonalLexOrder(m, n)
    for c in range(1, m + 1):
        for d in range(1, n + 1):
            for config in Configuration:
                if config is Configuration.ROW_RIGHT_COL_DOWN:
                    row_arm = [(c, j) for j in range(d + 1, n + 1)]
                    col_arm = [(i, d) for i in range(c + 1, m + 1)]
                else:
                    row_arm = [(c, j) for j in range(1, d)]
                    col_arm = [(i, d) for i in range(1, c)]
                for pivot in range(q + 1):
                    for row_part in _compositions(q - pivot, len(row_arm)):
                        for col_part in _compositions(q - pivot, len(col_arm)):
                            exps = {(c, d): pivot}
                            exps.update(zip(row_arm, row_part))
                            exps.update(zip(col_arm, col_part))
                            yield QStair(c, d, q, config, order.monomial(exps))


def generate_q_stairs(m: int, n: int, q: int, stair_budget: int | None = None) -> list[Monomial]:
    """Distinct q-stair monomials, largest first in the lex order."""
    limit = budget(DEFAULT_STAIR_BUDGET) if stair_budget is None else stair_budget
    seen: set[Monomial] = set()
    produced = 0
    for stair in q_stair_descriptors(m, n, q):
        produced += 1
        if produced > limit:
            raise BudgetExceeded(f"more than {limit} q-stair descriptors for ({m},{n},{q})")
        seen.add(stair.monomial)
    return sorted(seen, reverse=True)


def minors(m: int, n: int) -> list[TermPolynomial]:
    """x_ab x_a'b' - x_a'b x_ab' for all a < a', b < b', in a fixed order."""
    order = DiagonalLexOrder(m, n)
    out = []
    for a, a2 in itertools.combinations(range(1, m + 1), 2):
        for b, b2 in itertools.combinations(range(1, n + 1), 2):
            diag = order.monomial({(a, b): 1, (a2, b2): 1})
            anti = order.monomial({(a2, b): 1, (a, b2): 1})
            out.append(TermPolynomial({diag: 1, anti: -1}, nvars=order.nvars))
    return out


class _Divisors:
    """Leading monomials of a basis, scanned largest first (ties: lowest
    construction index) so division picks divisors deterministically."""

    def __init__(self, basis: Sequence[TermPolynomial]):
        self.basis = list(basis)
        if any(g.is_zero() for g in self.basis):
            raise ValueError("basis elements must be nonzero")
        self.leads = [g.leading_monomial() for g in self.basis]
        self.scan = sorted(range(len(self.basis)), key=lambda k: (self.leads[k], -k), reverse=True)

    def find(self, mono: Monomial) -> int | None:
        for k in self.scan:
            if divides(self.leads[k], mono):
                return k
        return None


def reduce(
    f: TermPolynomial,
    basis: Sequence[TermPolynomial] | _Divisors,
    order: DiagonalLexOrder | None = None,
) -> TermPolynomial:
    """Normal form of ``f``: no remaining term is divisible by a leading
    monomial of ``basis``.

    ``order`` is accepted for symmetry with the other helpers; the lex order
    is built into the tuple representation.
    """
    divs = basis if isinstance(basis, _Divisors) else _Divisors(basis)
    work = f.copy()
    remainder = TermPolynomial(nvars=f.nvars)
    while work.terms:
        lead = max(work.terms)
        coeff = work.terms[lead]
        k = divs.find(lead)
        if k is None:
            remainder.terms[lead] = coeff
            del work.terms[lead]
            continue
        g = divs.basis[k]
        shift = mono_div(lead, divs.leads[k])
        work.add_scaled(g, -coeff / g.leading_coefficient(), shift)
    return remainder


def s_polynomial(f: TermPolynomial, g: TermPolynomial) -> TermPolynomial:
    lf, lg = f.leading_monomial(), g.leading_monomial()
    lcm = mono_lcm(lf, lg)
    out = TermPolynomial(nvars=f.nvars)
    out.add_scaled(f, 1 / f.leading_coefficient(), mono_div(lcm, lf))
    out.add_scaled(g, -1 / g.leading_coefficient(), mono_div(lcm, lg))
    return out


@dataclass
class GroebnerReport:
    m: int
    n: int
    q: int
    stairs: int
    minors: int
    pairs_checked: int
    pairs_skipped: int
    diagonal_leads: bool
    minimal: bool
    reduced: bool
    failures: list[tuple[int, int]] = field(default_factory=list)
    minimality_witness: tuple[int, int] | None = None
    reducedness_witness: tuple[int, int] | None = None
    redundant: int = 0
    basis: list[TermPolynomial] = field(default_factory=list, repr=False)

    @property
    def groebner(self) -> bool:
        return not self.failures

    @property
    def passed(self) -> bool:
        return self.diagonal_leads and self.groebner and self.minimal and self.reduced

    @property
    def first_failure(self) -> tuple[int, int] | None:
        return self.failures[0] if self.failures else None


def predicted_basis(m: int, n: int, q: int, stair_budget: int | None = None) -> list[TermPolynomial]:
    """q-stair monomials (largest first) followed by the minors."""
    stairs = [TermPolynomial.monomial(s) for s in generate_q_stairs(m, n, q, stair_budget)]
    return stairs + minors(m, n)


def minimal_q_stairs(m: int, n: int, q: int, stair_budget: int | None = None) -> list[Monomial]:
    """q-stairs not divisible by any other q-stair.

    The dropped ones have pivot exponent 0 and a whole arm concentrated in one
    cell, so they are proper multiples of some x_ij^q.
    """
    stairs = generate_q_stairs(m, n, q, stair_budget)
    powers = {s for s in stairs if max(s) == q and sum(s) == q}
    return [
        s for s in stairs
        if s in powers or not any(divides(p, s) for p in powers)
    ]


def verify_groebner(
    m: int, n: int, q: int, stair_budget: int | None = None, *, pruned: bool = False
) -> GroebnerReport:
    """Check that q-stairs plus minors form a minimal reduced Groebner basis.

    With ``pruned=True`` the redundant q-stairs (see :func:`minimal_q_stairs`)
    are left out of the basis first.
    """
    order = DiagonalLexOrder(m, n)
    if pruned:
        stairs = minimal_q_stairs(m, n, q, stair_budget)
    else:
        stairs = generate_q_stairs(m, n, q, stair_budget)
    dets = minors(m, n)
    basis = [TermPolynomial.monomial(s) for s in stairs] + dets
    diagonal_leads = all(order.has_diagonal_lead(g) for g in dets)

    divs = _Divisors(basis)
    failures = []
    checked = skipped = 0
    for a, b in itertools.combinations(range(len(basis)), 2):
        if coprime(divs.leads[a], divs.leads[b]):
            skipped += 1
            continue
        checked += 1
        if not reduce(s_polynomial(basis[a], basis[b]), divs).is_zero():
            failures.append((a, b))
    failures.sort()

    # (divisor index, divided index) pairs among leading monomials.
    redundant = [
        (b, a)
        for a, la in enumerate(divs.leads)
        for b, lb in enumerate(divs.leads)
        if a != b and divides(lb, la)
    ]

    reducedness_witness = None
    for k, g in enumerate(dets, start=len(stairs)):
        for mono in g.trailing_monomials():
            hit = divs.find(mono)
            if hit is not None:
                reducedness_witness = (k, hit)
                break
        if reducedness_witness:
            break

    return GroebnerReport(
        m=m,
        n=n,
        q=q,
        stairs=len(stairs),
        minors=len(dets),
        pairs_checked=checked,
        pairs_skipped=skipped,
        diagonal_leads=diagonal_leads,
        minimal=not redundant,
        reduced=reducedness_witness is None,
        failures=failures,
        minimality_witness=redundant[0] if redundant else None,
        reducedness_witness=reducedness_witness,
        redundant=len({a for _, a in redundant}),
        basis=basis,
    )


def check_standard_budget(m: int, n: int, q: int, state_budget: int | None = None) -> None:
    limit = budget(DEFAULT_STATE_BUDGET) if state_budget is None else state_budget
    if q ** (m * n) > limit:
        raise BudgetExceeded(f"{q}^({m}*{n}) candidate monomials exceed the budget {limit}")


def standard_monomial_count(
    m: int, n: int, q: int, state_budget: int | None = None, stair_budget: int | None = None
) -> int:
    """Monomials not divisible by any leading monomial of the predicted basis.

    Exponents >= q are excluded up front since x_ij^q is a basis element.
    """
    check_standard_budget(m, n, q, state_budget)
    stairs = generate_q_stairs(m, n, q, stair_budget)
    leads = [s for s in stairs if max(s) < q] + [g.leading_monomial() for g in minors(m, n)]
    return sum(
        1
        for mono in itertools.product(range(q), repeat=m * n)
        if not any(divides(lead, mono) for lead in leads)
    )


def complete_basis(generators: Sequence[TermPolynomial]) -> list[TermPolynomial]:
    """Reduced Groebner basis of the ideal generated by ``generators``, by
    plain Buchberger completion.  Meant for small test ideals only."""
    basis = [g.copy() for g in generators if not g.is_zero()]
    pairs = list(itertools.combinations(range(len(basis)), 2))
    while pairs:
        a, b = pairs.pop()
        if coprime(basis[a].leading_monomial(), basis[b].leading_monomial()):
            continue
        rem = reduce(s_polynomial(basis[a], basis[b]), basis)
        if not rem.is_zero():
            basis.append(rem)
            pairs.extend((k, len(basis) - 1) for k in range(len(basis) - 1))

    # Drop redundant leads, then interreduce and make monic.
    minimal: list[TermPolynomial] = []
    for k, g in enumerate(basis):
        lead = g.leading_monomial()
        if any(
            divides(h.leading_monomial(), lead)
            and (h.leading_monomial() != lead or j < k)
            for j, h in enumerate(basis)
            if j != k
        ):
            continue
        minimal.append(g)
    out = []
    for k, g in enumerate(minimal):
        others = minimal[:k] + minimal[k + 1 :]
        lead = g.leading_monomial()
        tail = TermPolynomial({mono: c for mono, c in g.terms.items() if mono != lead}, nvars=g.nvars)
        reduced = reduce(tail, others) if others else tail
        reduced.terms[lead] = g.terms[lead]
        lc = g.terms[lead]
        out.append(TermPolynomial({mono: c / lc for mono, c in reduced.terms.items()}, nvars=g.nvars))
    return sorted(out, key=lambda g: g.leading_monomial(), reverse=True)

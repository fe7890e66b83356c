import itertools

import pytest

from hkdet.budget import BudgetExceeded
from hkdet.counting import hilbert_kunz
from hkdet.groebner import (
    DiagonalLexOrder,
    TermPolynomial,
    complete_basis,
    divides,
    generate_q_stairs,
    minimal_q_stairs,
    minors,
    q_stair_descriptors,
    reduce,
    s_polynomial,
    standard_monomial_count,
    verify_groebner,
)
from hkdet.oracles import is_staircase

GRID = [(m, n, q) for m in range(1, 4) for n in range(1, 4) for q in range(1, 4)] + [(2, 4, 2)]


def definitional_stairs(m, n, q):
    """Filter every exponent matrix with entries <= q against the q-stair
    definition: staircase, support on one of the two pivot arm shapes, and
    both pivot lines summing to q."""
    found = set()
    for flat in itertools.product(range(q + 1), repeat=m * n):
        p = [flat[i * n:(i + 1) * n] for i in range(m)]
        if not is_staircase(p):
            continue
        support = {(i, j) for i in range(m) for j in range(n) if p[i][j]}
        for c, d in itertools.product(range(m), range(n)):
            if sum(p[c]) != q or sum(p[i][d] for i in range(m)) != q:
                continue
            down = {(c, j) for j in range(d, n)} | {(i, d) for i in range(c, m)}
            up = {(c, j) for j in range(d + 1)} | {(i, d) for i in range(c + 1)}
            if support <= down or support <= up:
                found.add(flat)
                break
    return found


@pytest.mark.parametrize("m,n,q", [(1, 1, 3), (1, 3, 2), (2, 2, 1), (2, 2, 2), (2, 2, 3), (2, 3, 2), (3, 2, 2), (3, 3, 2)])
def test_stairs_match_definition(m, n, q):
    assert set(generate_q_stairs(m, n, q)) == definitional_stairs(m, n, q)


def test_stair_examples():
    order = DiagonalLexOrder(2, 2)
    assert generate_q_stairs(1, 1, 3) == [(3,)]
    stairs = set(generate_q_stairs(2, 2, 2))
    assert order.monomial({(1, 1): 1, (1, 2): 1, (2, 1): 1}) in stairs
    assert order.monomial({(1, 2): 1, (2, 1): 1}) not in stairs


def test_stairs_are_distinct_and_sorted():
    stairs = generate_q_stairs(3, 3, 3)
    assert len(stairs) == len(set(stairs))
    assert stairs == sorted(stairs, reverse=True)


@pytest.mark.parametrize("m,n,q", [(2, 3, 3), (3, 3, 2), (2, 4, 2)])
def test_descriptor_invariants(m, n, q):
    order = DiagonalLexOrder(m, n)
    for stair in q_stair_descriptors(m, n, q):
        p = order.as_matrix(stair.monomial)
        assert is_staircase(p)
        assert sum(p[stair.c - 1]) == q
        assert sum(row[stair.d - 1] for row in p) == q


def test_stair_budget():
    with pytest.raises(BudgetExceeded):
        generate_q_stairs(3, 3, 3, stair_budget=10)


def test_minor_examples():
    assert len(minors(2, 2)) == 1
    assert len(minors(2, 3)) == 3
    assert minors(1, 5) == []
    assert len(minors(3, 4)) == 18


@pytest.mark.parametrize("m,n", [(2, 2), (3, 4), (4, 3)])
def test_minors_have_diagonal_leads(m, n):
    order = DiagonalLexOrder(m, n)
    assert all(order.has_diagonal_lead(g) for g in minors(m, n))


def test_order_rejects_bad_variable():
    with pytest.raises(IndexError):
        DiagonalLexOrder(2, 2).index(3, 1)


def test_reduce_examples():
    order = DiagonalLexOrder(2, 2)
    (g,) = minors(2, 2)
    assert reduce(g, [g]).is_zero()
    diag = TermPolynomial.monomial(order.monomial({(1, 1): 1, (2, 2): 1}))
    anti = TermPolynomial.monomial(order.monomial({(1, 2): 1, (2, 1): 1}))
    assert reduce(diag, [g]) == anti
    one = TermPolynomial.monomial((0, 0, 0, 0))
    assert reduce(one, [g, diag]) == one


def test_reduce_is_normal_form():
    basis = minors(3, 3)
    leads = [g.leading_monomial() for g in basis]
    order = DiagonalLexOrder(3, 3)
    f = TermPolynomial.monomial(order.monomial({(1, 1): 2, (2, 2): 1, (3, 3): 1}))
    rem = reduce(f, basis)
    assert not rem.is_zero()
    for mono in rem.terms:
        assert not any(divides(lead, mono) for lead in leads)


def test_s_polynomial_of_monomials_vanishes():
    a = TermPolynomial.monomial((2, 1, 0, 0))
    b = TermPolynomial.monomial((0, 3, 0, 1))
    assert s_polynomial(a, b).is_zero()


@pytest.mark.parametrize("m,n,q", GRID)
def test_basis_is_groebner(m, n, q):
    report = verify_groebner(m, n, q)
    assert report.diagonal_leads
    assert report.groebner, report.first_failure
    assert report.stairs + report.minors == len(report.basis)


@pytest.mark.parametrize("m,n,q", GRID)
def test_reducedness_and_minimality_pattern(m, n, q):
    report = verify_groebner(m, n, q)
    if min(m, n) == 1:
        assert report.passed
        return
    # With two or more rows and columns some q-stairs are multiples of x_ij^q,
    # and at q = 1 every variable is a stair so the minors are redundant too.
    assert not report.minimal
    assert report.reduced == (q >= 2)


@pytest.mark.parametrize("m,n,q", [c for c in GRID if c[2] >= 2])
def test_pruned_basis_is_minimal_reduced_groebner(m, n, q):
    assert verify_groebner(m, n, q, pruned=True).passed


@pytest.mark.parametrize("m,n,q", [(2, 2, 2), (2, 3, 3), (3, 3, 2)])
def test_dropped_stairs_are_power_multiples(m, n, q):
    kept = set(minimal_q_stairs(m, n, q))
    powers = [s for s in kept if sum(s) == q and max(s) == q]
    for s in generate_q_stairs(m, n, q):
        if s not in kept:
            assert any(divides(p, s) and p != s for p in powers)


def test_redundant_example_at_q2():
    order = DiagonalLexOrder(2, 2)
    stair = order.monomial({(1, 2): 2, (2, 1): 2})
    assert stair in generate_q_stairs(2, 2, 2)
    assert stair not in minimal_q_stairs(2, 2, 2)
    report = verify_groebner(2, 2, 2)
    assert report.redundant == 1


def test_single_row_example():
    report = verify_groebner(1, 2, 3)
    assert report.passed
    assert report.minors == 0
    assert generate_q_stairs(1, 2, 3) == [(3, 0), (0, 3)]


def test_standard_monomial_examples():
    assert standard_monomial_count(2, 2, 2) == 10
    assert standard_monomial_count(1, 2, 2) == 4
    assert standard_monomial_count(2, 2, 1) == 1


@pytest.mark.parametrize("m,n,q", GRID)
def test_standard_monomials_match_count(m, n, q):
    assert standard_monomial_count(m, n, q) == hilbert_kunz(m, n, q)


def test_standard_monomial_budget():
    with pytest.raises(BudgetExceeded):
        standard_monomial_count(5, 5, 5)


@pytest.mark.parametrize("m,n,q", [(2, 2, 2), (2, 2, 3), (2, 3, 2)])
def test_stairs_lie_in_the_ideal(m, n, q):
    order = DiagonalLexOrder(m, n)
    powers = [
        TermPolynomial.monomial(order.monomial({(i, j): q}))
        for i in range(1, m + 1)
        for j in range(1, n + 1)
    ]
    completed = complete_basis(minors(m, n) + powers)
    for stair in generate_q_stairs(m, n, q):
        assert reduce(TermPolynomial.monomial(stair), completed).is_zero()


@pytest.mark.parametrize("m,n,q", [(2, 2, 2), (2, 3, 2)])
def test_completion_agrees_with_pruned_basis(m, n, q):
    order = DiagonalLexOrder(m, n)
    powers = [
        TermPolynomial.monomial(order.monomial({(i, j): q}))
        for i in range(1, m + 1)
        for j in range(1, n + 1)
    ]
    completed = complete_basis(minors(m, n) + powers)
    leads = {g.leading_monomial() for g in completed}
    assert leads == set(minimal_q_stairs(m, n, q)) | {g.leading_monomial() for g in minors(m, n)}

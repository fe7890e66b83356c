"""Show which q-stair monomials are redundant in the predicted basis and check
the pruned basis against a from-scratch Buchberger completion."""
from __future__ import annotations

import argparse

from hkdet.groebner import (
    DiagonalLexOrder,
    TermPolynomial,
    complete_basis,
    generate_q_stairs,
    minimal_q_stairs,
    minors,
    verify_groebner,
)


def describe(order: DiagonalLexOrder, mono) -> str:
    parts = []
    for k, e in enumerate(mono):
        if e:
            i, j = divmod(k, order.n)
            parts.append(f"x{i + 1}{j + 1}" + (f"^{e}" if e > 1 else ""))
    return "*".join(parts) or "1"


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("m", type=int)
    parser.add_argument("n", type=int)
    parser.add_argument("q", type=int)
    parser.add_argument("--complete", action="store_true", help="also run Buchberger from scratch")
    args = parser.parse_args()
    m, n, q = args.m, args.n, args.q
    order = DiagonalLexOrder(m, n)

    stairs = generate_q_stairs(m, n, q)
    kept = set(minimal_q_stairs(m, n, q))
    dropped = [s for s in stairs if s not in kept]
    print(f"q-stairs: {len(stairs)}, redundant: {len(dropped)}")
    for s in dropped:
        print("  ", describe(order, s))

    for pruned in (False, True):
        r = verify_groebner(m, n, q, pruned=pruned)
        label = "pruned " if pruned else "literal"
        print(f"{label}: groebner={r.groebner} minimal={r.minimal} reduced={r.reduced}")

    if args.complete:
        powers = [
            TermPolynomial.monomial(order.monomial({(i, j): q}))
            for i in range(1, m + 1)
            for j in range(1, n + 1)
        ]
        leads = {g.leading_monomial() for g in complete_basis(minors(m, n) + powers)}
        expected = kept | {g.leading_monomial() for g in minors(m, n)}
        print(f"completed basis leads == pruned basis leads: {leads == expected}")


if __name__ == "__main__":
    main()

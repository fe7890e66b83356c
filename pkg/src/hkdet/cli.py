"""Command-line front end.

Every integer leaves the process as a decimal string and infinite bounds as
"inf", so downstream JSON/CSV readers never truncate to 64 bits.

Exit codes: 0 success, 1 a mathematical check failed, 2 bad usage or a
refused (over-budget) computation.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Any

from . import binomial, closed_forms, counting, groebner, oracles, polyfit
from .budget import BudgetExceeded
from .counting import INF

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_bounds(text: str | None, length: int, what: str) -> tuple:
    if text is None:
        return (INF,) * length
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != length:
        raise UsageError(f"--{what} needs {length} entries, got {len(parts)}")
    out = []
    for p in parts:
        if p.lower() in ("inf", "infinity", "∞"):
            out.append(INF)
            continue
        try:
            value = int(p)
        except ValueError:
            raise UsageError(f"--{what}: {p!r} is not a nonnegative integer or 'inf'") from None
        if value < 0:
            raise UsageError(f"--{what}: bounds must be nonnegative, got {value}")
        out.append(value)
    return tuple(out)


def to_jsonable(value: Any) -> Any:
    """Integers -> decimal strings, INF -> "inf", Fraction -> {numerator,
    denominator}, polynomials -> list of [numerator, denominator] pairs."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        if value == INF:
            return "inf"
        raise TypeError(f"unexpected float {value!r}")
    if isinstance(value, Fraction):
        return {"numerator": str(value.numerator), "denominator": str(value.denominator)}
    if isinstance(value, polyfit.RationalPolynomial):
        return [[str(c.numerator), str(c.denominator)] for c in value.coeffs]
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    return str(value)


def fraction_text(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def bound_text(b) -> str:
    return "inf" if b == INF else str(b)


def emit(fmt: str, command: str, inputs: dict, result: Any, plain: str, rows: list[list] | None = None):
    if fmt == "json":
        print(json.dumps({"command": command, "inputs": to_jsonable(inputs), "result": to_jsonable(result)}))
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\r\n")
        for row in rows or []:
            writer.writerow(row)
        sys.stdout.write(buf.getvalue())
    else:
        print(plain)


def _positive(name: str, value: int) -> None:
    if value < 1:
        raise UsageError(f"{name} must be a positive integer, got {value}")


def cmd_count(args) -> int:
    _positive("m", args.m)
    _positive("n", args.n)
    _positive("q", args.q)
    rows = parse_bounds(args.rows, args.m, "rows")
    cols = parse_bounds(args.cols, args.n, "cols")
    value = counting.count(counting.CountQuery(args.m, args.n, args.q, rows, cols))
    inputs = {"m": args.m, "n": args.n, "q": args.q, "rows": rows, "cols": cols}
    emit(
        args.format, "count", inputs, {"count": value}, str(value),
        rows=[["m", "n", "q", "rows", "cols", "count"],
              [args.m, args.n, args.q, ",".join(map(bound_text, rows)),
               ",".join(map(bound_text, cols)), value]],
    )
    return EXIT_OK


def cmd_poly(args) -> int:
    _positive("m", args.m)
    _positive("n", args.n)
    poly = polyfit.hk_polynomial(args.m, args.n)
    mult = poly.coeffs[args.m + args.n - 1]
    coeffs = ", ".join(fraction_text(c) for c in poly.coeffs)
    plain = f"HK({args.m},{args.n};q) = {poly}\ncoefficients: [{coeffs}]\nmultiplicity: {fraction_text(mult)}"
    emit(
        args.format, "poly", {"m": args.m, "n": args.n},
        {"coefficients": poly, "degree": poly.degree, "multiplicity": mult}, plain,
        rows=[["degree", "numerator", "denominator"]]
        + [[k, c.numerator, c.denominator] for k, c in enumerate(poly.coeffs)],
    )
    return EXIT_OK


def cmd_mult(args) -> int:
    _positive("m", args.m)
    _positive("n", args.n)
    mult = polyfit.multiplicity(args.m, args.n)
    result: dict[str, Any] = {"multiplicity": mult}
    lines = [f"e_HK({args.m},{args.n}) = {fraction_text(mult)}"]
    status = EXIT_OK
    small, other = sorted((args.m, args.n))
    if small == 2:
        closed = closed_forms.hk_multiplicity_2n(other)
        result["closed_form"] = closed
        result["closed_form_agrees"] = closed == mult
        lines.append(f"n/2 + n/(n+1)! = {fraction_text(closed)} ({'agrees' if closed == mult else 'DISAGREES'})")
        if closed != mult:
            status = EXIT_FAIL
    ey = closed_forms.ey_multiplicity(args.m, args.n)
    result["stirling_formula"] = ey
    result["stirling_formula_agrees"] = ey == mult
    lines.append(f"Stirling-number formula = {fraction_text(ey)} ({'agrees' if ey == mult else 'differs'})")
    emit(
        args.format, "mult", {"m": args.m, "n": args.n}, result, "\n".join(lines),
        rows=[["m", "n", "numerator", "denominator"], [args.m, args.n, mult.numerator, mult.denominator]],
    )
    return status


def cmd_table(args) -> int:
    _positive("m", args.m)
    _positive("n", args.n)
    _positive("q_max", args.q_max)
    table = [(q, counting.hilbert_kunz(args.m, args.n, q)) for q in range(1, args.q_max + 1)]
    emit(
        args.format, "table", {"m": args.m, "n": args.n, "q_max": args.q_max},
        [{"q": q, "value": v} for q, v in table],
        "\n".join(f"{q} {v}" for q, v in table),
        rows=[["q", "value"]] + [[q, v] for q, v in table],
    )
    return EXIT_OK


def cmd_oracle_check(args) -> int:
    _positive("max_mn", args.max_mn)
    _positive("max_q", args.max_q)
    oracles.check_battery_budget(args.max_mn, args.max_q)
    batteries = [
        oracles.brute_battery(args.max_mn, args.max_q, seed=args.seed),
        oracles.segre_battery(args.max_mn, args.max_q),
    ]
    result = {}
    lines, rows = [], [["battery", "checked", "passed", "first_mismatch"]]
    for b in batteries:
        first = None
        if b.mismatches:
            item, fast, slow = b.mismatches[0]
            if isinstance(item, counting.CountQuery):
                item = {"m": item.m, "n": item.n, "q": item.q, "rows": item.rows, "cols": item.cols}
            first = {"query": item, "recursion": fast, "oracle": slow}
        result[b.name] = {"checked": b.checked, "passed": b.passed, "first_mismatch": first}
        lines.append(f"{b.name}: {'PASS' if b.passed else 'FAIL'} ({b.checked} cases)"
                     + ("" if first is None else f" first mismatch {first}"))
        rows.append([b.name, b.checked, b.passed, "" if first is None else json.dumps(to_jsonable(first))])
    emit(args.format, "oracle-check",
         {"max_mn": args.max_mn, "max_q": args.max_q, "seed": args.seed},
         result, "\n".join(lines), rows=rows)
    return EXIT_OK if all(b.passed for b in batteries) else EXIT_FAIL


def _report_dict(report: groebner.GroebnerReport) -> dict:
    return {
        "passed": report.passed,
        "groebner": report.groebner,
        "minimal": report.minimal,
        "reduced": report.reduced,
        "diagonal_leads": report.diagonal_leads,
        "stairs": report.stairs,
        "minors": report.minors,
        "pairs_checked": report.pairs_checked,
        "pairs_skipped": report.pairs_skipped,
        "redundant": report.redundant,
        "first_failure": report.first_failure,
        "minimality_witness": report.minimality_witness,
        "reducedness_witness": report.reducedness_witness,
    }


def cmd_gb_verify(args) -> int:
    m, n, q = args.m, args.n, args.q
    _positive("m", m)
    _positive("n", n)
    _positive("q", q)
    groebner.check_standard_budget(m, n, q)
    report = groebner.verify_groebner(m, n, q)
    pruned = groebner.verify_groebner(m, n, q, pruned=True)
    standard = groebner.standard_monomial_count(m, n, q)
    hk = counting.hilbert_kunz(m, n, q)
    match = standard == hk
    result = {
        "verification": _report_dict(report),
        "pruned_verification": _report_dict(pruned),
        "standard_monomials": standard,
        "hilbert_kunz": hk,
        "match": match,
    }

    def verdict(r: groebner.GroebnerReport) -> str:
        parts = [f"groebner={'yes' if r.groebner else 'NO'}",
                 f"minimal={'yes' if r.minimal else 'NO'}",
                 f"reduced={'yes' if r.reduced else 'NO'}"]
        return f"{'pass' if r.passed else 'FAIL'} ({', '.join(parts)})"

    plain = "\n".join([
        f"basis: {report.stairs} q-stair monomials + {report.minors} minors",
        f"S-pairs checked: {report.pairs_checked} (coprime skipped: {report.pairs_skipped})",
        f"verification: {verdict(report)}"
        + (f", {report.redundant} redundant leading terms" if report.redundant else ""),
        f"without redundant q-stairs ({pruned.stairs} kept): {verdict(pruned)}",
        f"standard monomials: {standard}",
        f"hilbert-kunz: {hk}",
        f"match={'true' if match else 'false'}",
    ])
    emit(args.format, "gb-verify", {"m": m, "n": n, "q": q}, result, plain,
         rows=[["m", "n", "q", "passed", "groebner", "minimal", "reduced", "standard_monomials", "match"],
               [m, n, q, report.passed, report.groebner, report.minimal, report.reduced, standard, match]])
    return EXIT_OK if report.passed and match else EXIT_FAIL


def cmd_lemmas(args) -> int:
    _positive("max_q", args.max_q)
    _positive("max_n", args.max_n)
    failures = binomial.lemma_grid(args.max_q, args.max_n)
    result = {"passed": not failures, "failures": failures[:20]}
    plain = "lemmas: PASS" if not failures else f"lemmas: FAIL, first failures {failures[:5]}"
    emit(args.format, "lemmas", {"max_q": args.max_q, "max_n": args.max_n}, result, plain,
         rows=[["max_q", "max_n", "passed", "failures"], [args.max_q, args.max_n, not failures, len(failures)]])
    return EXIT_OK if not failures else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hkdet",
        description="Hilbert-Kunz functions of k[X]/I_2(X) for a generic m x n matrix X.",
    )
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("plain", "json", "csv"), default="plain")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[fmt], help="bounded staircase count N_q")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--rows", help="comma list of m row caps (integers or 'inf')")
    p.add_argument("--cols", help="comma list of n column caps (integers or 'inf')")
    p.set_defaults(func=cmd_count)

    for name, func, text in (("poly", cmd_poly, "HK polynomial in q"),
                             ("mult", cmd_mult, "Hilbert-Kunz multiplicity")):
        p = sub.add_parser(name, parents=[fmt], help=text)
        p.add_argument("m", type=int)
        p.add_argument("n", type=int)
        p.set_defaults(func=func)

    p = sub.add_parser("table", parents=[fmt], help="HK(m, n, q) for q = 1..q_max")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("q_max", type=int)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("oracle-check", parents=[fmt], help="recursion vs brute force and Segre formula")
    p.add_argument("max_mn", type=int)
    p.add_argument("max_q", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_oracle_check)

    p = sub.add_parser("gb-verify", parents=[fmt], help="check the predicted Groebner basis")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("q", type=int)
    p.set_defaults(func=cmd_gb_verify)

    p = sub.add_parser("lemmas", parents=[fmt], help="binomial-sum identity grid")
    p.add_argument("--max-q", type=int, default=30)
    p.add_argument("--max-n", type=int, default=6)
    p.set_defaults(func=cmd_lemmas)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except polyfit.InterpolationError as exc:
        print(f"hkdet {args.command}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (UsageError, BudgetExceeded, ValueError) as exc:
        print(f"hkdet {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

"""Compare the Stirling-number multiplicity formula (read with d = m + n - 1)
against the leading coefficient of the interpolated HK polynomial."""
from __future__ import annotations

import argparse

from hkdet.closed_forms import ey_multiplicity
from hkdet.polyfit import multiplicity


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-sum", type=int, default=7, help="largest m + n to tabulate")
    args = parser.parse_args()

    print(f"{'m':>2} {'n':>2}  {'fitted':>14}  {'formula':>14}  agree")
    for m in range(2, args.max_sum):
        for n in range(m, args.max_sum - m + 1):
            fit, formula = multiplicity(m, n), ey_multiplicity(m, n)
            print(f"{m:>2} {n:>2}  {str(fit):>14}  {str(formula):>14}  {fit == formula}")


if __name__ == "__main__":
    main()

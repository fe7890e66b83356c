"""Print HK polynomials and multiplicities for small m x n, with the 2 x n
closed forms alongside."""
from __future__ import annotations

import argparse
import time

from hkdet.closed_forms import hk_polynomial_2n
from hkdet.polyfit import hk_polynomial


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-sum", type=int, default=8, help="largest m + n")
    args = parser.parse_args()

    for m in range(1, args.max_sum):
        for n in range(m, args.max_sum - m + 1):
            t = time.perf_counter()
            poly = hk_polynomial(m, n)
            elapsed = time.perf_counter() - t
            line = f"HK({m},{n}) = {poly}    e_HK = {poly.leading}    [{elapsed:.2f}s]"
            if m == 2:
                line += f"    closed form agrees: {poly == hk_polynomial_2n(n)}"
            print(line)


if __name__ == "__main__":
    main()

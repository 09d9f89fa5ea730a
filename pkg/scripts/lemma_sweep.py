#!/usr/bin/env python3
"""Sweep the identity suite over coefficient triples.

For each prime, every triple with invertible row/column weights (a and c
coprime to p, b arbitrary) is checked at the requested depth; the corner
identity genuinely needs the invertibility, every other identity holds
with zeros too.
"""

import argparse
from itertools import product

from fractile import Coefficients, check_lemmas


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--primes", type=int, nargs="+", default=[2, 3, 5])
    parser.add_argument("--k-max", type=int, default=2)
    args = parser.parse_args()

    for p in args.primes:
        failures = 0
        cases = 0
        for a, b, c in product(range(1, p), range(p), range(1, p)):
            report = check_lemmas(Coefficients(a, b, c, p), args.k_max)
            cases += 1
            if not report.all_passed:
                failures += 1
                bad = [r.name for r in report.results if not r.passed]
                print(f"p={p} (a,b,c)=({a},{b},{c}): FAILED {bad}")
        print(f"p={p}: {cases - failures}/{cases} triples pass "
              f"at k_max={args.k_max}")


if __name__ == "__main__":
    main()

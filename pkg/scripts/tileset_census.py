#!/usr/bin/env python3
"""Window population and tile counts for the corner-recursion rules.

Shows how many distinct windows a matrix exhibits as the horizon grows,
when the population stabilizes, and the resulting tile counts before and
after pruning.  The mod-3 carpet tops out at 26 occurring windows, which
is why its pruned system keeps the four never-occurring bulk tiles to
reach the classic count of 30.
"""

import argparse

from fractile import (Coefficients, build_full_system, delannoy_rule,
                      horizon_is_stable, prune_reachable, rule_matrix,
                      window_at)
from fractile.tilegen import glue_rows, glue_vector


def window_census(rule, side: int) -> int:
    labels = rule_matrix(rule, side, side)
    keys = set()
    for x in range(side):
        for y in range(side):
            w = window_at(labels, x, y, rule.n)
            keys.add((glue_vector(w.west), glue_rows(w.south)))
    return len(keys)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--coeffs", type=int, nargs=4, action="append",
                        metavar=("A", "B", "C", "P"),
                        help="recursion weights and modulus (repeatable)")
    parser.add_argument("--horizons", type=int, nargs="+",
                        default=[3, 9, 27, 81, 243])
    args = parser.parse_args()
    coeff_sets = args.coeffs or [[1, 1, 1, 3], [1, 2, 2, 5], [1, 0, 1, 2]]

    for a, b, c, p in coeff_sets:
        rule = delannoy_rule(Coefficients(a, b, c, p))
        full = build_full_system(rule)
        print(f"\n{rule.name}: {len(full.tiles)} tiles before pruning")
        for side in args.horizons:
            count = window_census(rule, side)
            pruned = prune_reachable(full, rule, (side, side))
            stable = horizon_is_stable(rule, (side, side))
            print(f"  horizon {side:>4}: {count:>3} occurring windows, "
                  f"{len(pruned.tiles):>3} tiles kept, "
                  f"boundary {'stable' if stable else 'still growing'}")


if __name__ == "__main__":
    main()

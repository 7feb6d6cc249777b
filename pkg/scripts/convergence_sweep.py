#!/usr/bin/env python3
"""Sweep the bound stage k and watch the certified digits double.

Each stage squares the outer ratio gap, so the certified digit count of the
entropy interval roughly doubles per k.  Useful for picking the cheapest k
for a target accuracy.

Usage: python scripts/convergence_sweep.py [--d 3] [--k-max 6] [--precision 200]
"""

from __future__ import annotations

import argparse

from hanoi_dimer.entropy import bounds
from hanoi_dimer.evolve import evolve_to
from hanoi_dimer.recursion_gen import generate


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--d", type=int, default=3)
    parser.add_argument("--k-max", type=int, default=6)
    parser.add_argument("--precision", type=int, default=200)
    args = parser.parse_args()

    system = generate(args.d)
    vectors = evolve_to(system, args.k_max)
    print(f"d={args.d}, precision={args.precision}")
    print(f"{'k':>3} {'certified':>9} {'lambda digits':>13}  shared prefix")
    for k in range(1, args.k_max + 1):
        result = bounds(args.d, k, vectors, precision=args.precision)
        prefix = result.lower.as_decimal()[: result.certified_digits + 2]
        shown = prefix if len(prefix) < 44 else prefix[:41] + "..."
        print(f"{k:>3} {result.certified_digits:>9} "
              f"{result.lambda_digits:>13}  {shown}")


if __name__ == "__main__":
    main()

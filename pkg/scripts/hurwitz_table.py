#!/usr/bin/env python3
"""Tabulate cover counts per degree: character route, enumeration, and the
connected/disconnected comparison.

Usage: python scripts/hurwitz_table.py [--max-degree 4] [--max-branch 6]
"""

import argparse
from fractions import Fraction

from cutjoin.hurwitz import (
    hurwitz_bruteforce,
    hurwitz_connected,
    hurwitz_disconnected,
    branch_count,
)
from cutjoin.partitions import enumerate_partitions


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--max-degree", type=int, default=4)
    parser.add_argument("--max-branch", type=int, default=6)
    parser.add_argument("--budget", type=int, default=10**7)
    args = parser.parse_args()

    for d in range(1, args.max_degree + 1):
        for mu in enumerate_partitions(d):
            rows = []
            for r in range(args.max_branch + 1):
                disc = hurwitz_disconnected(r, mu)
                if not disc:
                    continue
                brute = hurwitz_bruteforce(r, mu, budget=args.budget)
                g2 = r - d - mu.length + 2
                conn = (
                    hurwitz_connected(g2 // 2, mu)
                    if g2 >= 0 and g2 % 2 == 0
                    else Fraction(0)
                )
                flag = "" if disc == brute else "  <-- MISMATCH"
                rows.append(f"  r={r}: all={disc}  enum={brute}  connected={conn}{flag}")
            if rows:
                print(f"mu=({mu}), branch counts r with nonzero counts:")
                print("\n".join(rows))


if __name__ == "__main__":
    main()

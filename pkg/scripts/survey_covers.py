#!/usr/bin/env python3
"""Survey elementary quotient covers across all positroids up to a size.

Enumerates every positroid on [n] for n in the requested range and reports,
per (n, rank): how many positroids there are, how their cover counts
distribute over the number of unblocked columns (the count is always
2^u - 1 for u unblocked columns), and how many have lattice-path shape.
Optionally cross-checks every cover against the cyclic-shift route.

Usage:
    python3 scripts/survey_covers.py --max-n 4 --cross-check
"""

from __future__ import annotations

import argparse
from collections import Counter
from dataclasses import dataclass

from flagpipes.decperm import covers_by_shift, decperm_of
from flagpipes.flagbuild import quotient_covers
from flagpipes.positroid import enumerate_positroids, is_lpm


@dataclass(frozen=True)
class Config:
    min_n: int = 1
    max_n: int = 4
    cross_check: bool = False


def parse_args(argv=None) -> Config:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--min-n", type=int, default=Config.min_n)
    parser.add_argument("--max-n", type=int, default=Config.max_n)
    parser.add_argument("--cross-check", action="store_true",
                        help="verify covers against the shift route")
    args = parser.parse_args(argv)
    return Config(min_n=args.min_n, max_n=args.max_n,
                  cross_check=args.cross_check)


def main(cfg: Config) -> int:
    mismatches = 0
    for n in range(cfg.min_n, cfg.max_n + 1):
        by_rank: dict[int, Counter] = {}
        lpm_by_rank: Counter = Counter()
        total = 0
        for P in enumerate_positroids(n):
            total += 1
            unblocked = len(P.unblocked)
            by_rank.setdefault(P.rank, Counter())[unblocked] += 1
            if is_lpm(P):
                lpm_by_rank[P.rank] += 1
            if cfg.cross_check and P.rank < n:
                via_dreams = {decperm_of(Q.dream).to_string()
                              for Q in quotient_covers(P)}
                via_shifts = {w.to_string()
                              for w in covers_by_shift(decperm_of(P.dream))}
                if via_dreams != via_shifts:
                    mismatches += 1
                    print(f"!! route mismatch at "
                          f"{decperm_of(P.dream).to_string()}")
        print(f"n={n}: {total} positroids")
        for rank in sorted(by_rank):
            dist = by_rank[rank]
            covers = sum((2 ** u - 1) * c for u, c in dist.items())
            spread = ", ".join(f"{u} unblocked x{c}"
                               for u, c in sorted(dist.items()))
            print(f"  rank {rank}: {sum(dist.values())} positroids, "
                  f"{lpm_by_rank[rank]} lattice-path shape, "
                  f"{covers} covers  [{spread}]")
    if cfg.cross_check:
        verdict = "agree everywhere" if mismatches == 0 else \
            f"{mismatches} mismatches"
        print(f"cover routes: {verdict}")
    return 0 if mismatches == 0 else 1


if __name__ == "__main__":
    raise SystemExit(main(parse_args()))

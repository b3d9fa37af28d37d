#!/usr/bin/env python3
"""Tabulate hom-set sizes: forests, all corelations, and the one-input-per-class ones.

The last two columns should agree: corelations with exactly one input per
class are counted by surjections from outputs onto inputs.
"""

import argparse
from dataclasses import dataclass

from synprop.checks import surjection_count_brute
from synprop.corel import enumerate_corel, is_in_circ
from synprop.syn import enumerate_syn


@dataclass(frozen=True)
class CountConfig:
    max_m: int = 3
    max_n: int = 5


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-m", type=int, default=3)
    parser.add_argument("--max-n", type=int, default=5)
    cfg = CountConfig(**vars(parser.parse_args()))

    print(f"{'m':>2} {'n':>2} {'|Syn|':>8} {'|Corel|':>8} {'|Corel°|':>9} {'surj(n,m)':>10}")
    for m in range(cfg.max_m + 1):
        for n in range(cfg.max_n + 1):
            rels = enumerate_corel(m, n)
            circ = sum(1 for r in rels if is_in_circ(r))
            print(f"{m:>2} {n:>2} {len(enumerate_syn(m, n)):>8} {len(rels):>8} "
                  f"{circ:>9} {surjection_count_brute(n, m):>10}")


if __name__ == "__main__":
    main()

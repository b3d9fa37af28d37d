#!/usr/bin/env python3
"""How many corelations does the pruned generator closure reach on its own?

Compares, per boundary (m, n), the corelations hit by collapsing cospans
built from the Frobenius generators, swaps and small functions against the
full count. Partitions that cross on four boundary points need a wider
intermediate than the pruning allows, so they show up as gaps here.
"""

import argparse
import time
from dataclasses import dataclass

from synprop.cospan import closure_bounds, pi_bar, generated_cospans
from synprop.corel import enumerate_corel


@dataclass(frozen=True)
class ReachConfig:
    depth: int = 4
    max_total: int = 4


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--depth", type=int, default=4)
    parser.add_argument("--max-total", type=int, default=4)
    cfg = ReachConfig(**vars(parser.parse_args()))

    print(f"{'m':>2} {'n':>2} {'reached':>8} {'total':>6}  missing")
    for total in range(cfg.max_total + 1):
        for m in range(total + 1):
            n = total - m
            start = time.perf_counter()
            pool = generated_cospans(cfg.depth, *closure_bounds(m, n))
            reached = {pi_bar(c) for c in pool if (c.m, c.n) == (m, n)}
            everything = enumerate_corel(m, n)
            missing = [str(r) for r in everything if r not in reached]
            print(f"{m:>2} {n:>2} {len(reached):>8} {len(everything):>6}  "
                  f"{', '.join(missing) or '-'}  ({time.perf_counter() - start:.2f}s)")


if __name__ == "__main__":
    main()

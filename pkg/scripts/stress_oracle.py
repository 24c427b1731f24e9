#!/usr/bin/env python3
"""Long-running randomized cross-check of the chamber table against the
brute-force lattice-point oracle.  Exits nonzero on the first mismatch."""

import argparse
import random
import sys
import time
from dataclasses import dataclass

from vpf import so5


@dataclass
class StressConfig:
    samples: int = 5000
    max_lambda: int = 60
    seed: int = 0


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--samples", type=int, default=StressConfig.samples)
    parser.add_argument("--max-lambda", type=int,
                        default=StressConfig.max_lambda)
    parser.add_argument("--seed", type=int, default=StressConfig.seed)
    args = parser.parse_args()
    cfg = StressConfig(args.samples, args.max_lambda, args.seed)

    table = so5.build_chamber_table(progress=print)
    rng = random.Random(cfg.seed)
    start = time.monotonic()
    for i in range(cfg.samples):
        lam = (rng.randrange(0, cfg.max_lambda + 1),
               rng.randrange(0, cfg.max_lambda + 1))
        beta = (rng.randrange(0, 2 * sum(lam) + 2),
                rng.randrange(0, lam[0] + 2 * lam[1] + 2))
        fast = so5.multiplicity(lam, beta, table)
        slow = so5.brute_force_multiplicity(lam, beta)
        if fast != slow:
            print("MISMATCH at lambda=%s beta=%s: table=%d oracle=%d"
                  % (lam, beta, fast, slow))
            return 1
        if (i + 1) % 500 == 0:
            print("%d/%d checked (%.1f s)"
                  % (i + 1, cfg.samples, time.monotonic() - start))
    print("all %d samples agree" % cfg.samples)
    return 0


if __name__ == "__main__":
    sys.exit(main())

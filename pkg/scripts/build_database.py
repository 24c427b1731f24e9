#!/usr/bin/env python3
"""Build the so5 chamber database and report build statistics."""

import argparse
import time
from dataclasses import dataclass

from vpf import db, so5
from vpf.cli import workers_from_env


@dataclass
class BuildConfig:
    out: str = "so5.json"
    workers: int = 1


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default=BuildConfig.out)
    args = parser.parse_args()
    cfg = BuildConfig(out=args.out, workers=workers_from_env())

    start = time.monotonic()
    table = so5.build_chamber_table(workers=cfg.workers, progress=print)
    elapsed = time.monotonic() - start
    a_rows, b_rows = so5.build_matrices()
    db.save_table(cfg.out, table, a_rows, b_rows)
    print("build time: %.1f s (workers=%d)" % (elapsed, cfg.workers))
    print("wrote %s" % cfg.out)


if __name__ == "__main__":
    main()

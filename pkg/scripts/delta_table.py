#!/usr/bin/env python3
"""Recompute the chain/antichain delta-vector table and check it against
the built-in golden values.

Usage: python3 scripts/delta_table.py [--dmax 6] [--quiet]
Exits 1 on any mismatch.
"""

import argparse
import sys
import time
from dataclasses import dataclass

from twinpoly.catalog import GOLDEN_DELTA, chain_antichain_pair
from twinpoly.ehrhart import delta_vector, ehrhart_counts
from twinpoly.geometry import build_omega, polytope_from_configuration


@dataclass(frozen=True)
class TableConfig:
    dmax: int = 6
    quiet: bool = False


def run(cfg: TableConfig) -> int:
    mismatches = 0
    for d in sorted(GOLDEN_DELTA):
        if d > cfg.dmax:
            continue
        t0 = time.time()
        poly = polytope_from_configuration(build_omega(*chain_antichain_pair(d)))
        counts = ehrhart_counts(poly.hrep, d)
        dv = tuple(delta_vector(counts, d))
        elapsed = time.time() - t0
        want = GOLDEN_DELTA[d]
        ok = dv == want
        if not ok:
            mismatches += 1
        if not cfg.quiet or not ok:
            status = "ok" if ok else f"MISMATCH (want {want})"
            print(f"d={d}  delta={dv}  [{elapsed:.2f}s]  {status}")
    if mismatches:
        print(f"{mismatches} mismatching rows", file=sys.stderr)
        return 1
    return 0


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--dmax", type=int, default=6)
    ap.add_argument("--quiet", action="store_true")
    args = ap.parse_args(argv)
    return run(TableConfig(dmax=args.dmax, quiet=args.quiet))


if __name__ == "__main__":
    sys.exit(main())

#!/usr/bin/env python3
"""Hunt for a pair of posets whose toric ideal is NOT generated by
quadratic binomials.

Samples unconstrained random pairs (scrambled labels, so pairs without a
common extension occur), recomputes the full toric ideal by elimination,
and tests whether its degree-2 part generates.  Pairs that do share an
extension additionally run the quadratic Groebner bundle.  Any violation
is printed with enough data to replay it.

Usage: python3 scripts/fuzz_conjecture.py [--trials 200] [--seed 0]
       [--dmin 2] [--dmax 4] [--edge-prob 0.35] [--max-variables 26]
Exits 1 when a violation is found (which would be a discovery, not a bug).
"""

import argparse
import random
import sys
import time
from dataclasses import dataclass

from twinpoly.catalog import random_pair
from twinpoly.groebner import (
    default_order,
    ideal_equality,
    toric_ideal_generators,
    verify_theorem2,
)
from twinpoly.posets import common_linear_extension, enumerate_ideals
from twinpoly.toric import build_variables, quadratic_kernel_binomials


@dataclass(frozen=True)
class FuzzConfig:
    trials: int = 200
    seed: int = 0
    dmin: int = 2
    dmax: int = 4
    edge_prob: float = 0.35
    max_variables: int = 26


def run(cfg: FuzzConfig) -> int:
    rng = random.Random(cfg.seed)
    checked = 0
    skipped = 0
    with_extension = 0
    violations = []
    t0 = time.time()
    for trial in range(cfg.trials):
        d = rng.randint(cfg.dmin, cfg.dmax)
        p, q = random_pair(d, rng, edge_prob=cfg.edge_prob)
        nvars = len(enumerate_ideals(p)) + len(enumerate_ideals(q)) - 1
        if nvars > cfg.max_variables:
            skipped += 1
            continue
        checked += 1
        vs = build_variables(p, q)
        order = default_order(vs)
        gens = toric_ideal_generators(vs, order)
        if not ideal_equality(quadratic_kernel_binomials(vs), gens, order):
            violations.append(("degree-2 generation fails", trial, p, q))
        if common_linear_extension(p, q) is not None:
            with_extension += 1
            if not verify_theorem2(p, q, order, toric_gens=gens).passed:
                violations.append(("quadratic basis bundle fails", trial, p, q))
    elapsed = time.time() - t0
    print(
        f"checked {checked} pairs ({skipped} skipped over the variable cap, "
        f"{with_extension} with a common extension) in {elapsed:.1f}s"
    )
    for kind, trial, p, q in violations:
        print(f"VIOLATION [{kind}] trial={trial} seed={cfg.seed}")
        print(f"  P: {p.to_text()}")
        print(f"  Q: {q.to_text()}")
    if violations:
        return 1
    print("no violations")
    return 0


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--trials", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--dmin", type=int, default=2)
    ap.add_argument("--dmax", type=int, default=4)
    ap.add_argument("--edge-prob", type=float, default=0.35)
    ap.add_argument("--max-variables", type=int, default=26)
    args = ap.parse_args(argv)
    return run(
        FuzzConfig(
            trials=args.trials,
            seed=args.seed,
            dmin=args.dmin,
            dmax=args.dmax,
            edge_prob=args.edge_prob,
            max_variables=args.max_variables,
        )
    )


if __name__ == "__main__":
    sys.exit(main())

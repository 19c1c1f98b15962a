#!/usr/bin/env python
"""Wall time of one psi_k as the motif grows."""
import argparse
import random
import time
from fractions import Fraction

from densityfp.densities import psi
from densityfp.seqcore import PeriodicSequence, normalize


def make(m, rng):
    D = 3 * m
    centers = [Fraction(c, D) for c in sorted(rng.sample(range(D), m))]
    # radius 1/(6m) is below half the grid step, so intervals never overlap
    return normalize(PeriodicSequence.from_lists(centers, [Fraction(rng.randint(0, 1), 6 * m)] * m))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--k", type=int, default=3)
    ap.add_argument("--sizes", type=int, nargs="+", default=[250, 500, 1000, 2000, 4000])
    args = ap.parse_args()
    rng = random.Random(0)
    prev = None
    print("m,seconds,ratio")
    for m in args.sizes:
        S = make(m, rng)
        t0 = time.perf_counter()
        psi(S, args.k)
        dt = time.perf_counter() - t0
        print(f"{m},{dt:.3f},{'' if prev is None else f'{dt / prev:.2f}'}")
        prev = dt


if __name__ == "__main__":
    main()

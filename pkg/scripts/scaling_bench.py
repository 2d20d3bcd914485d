#!/usr/bin/env python3
"""Wall-time scaling of the tree sweep on random caterpillar inputs.

Prints one row per size: n, seconds, ratio to the previous row, and the
bit length of the largest output coefficient (the arithmetic payload
that dominates past a few hundred vertices).
"""

from __future__ import annotations

import argparse
import random
import time

from chromaflow.generators import random_caterpillar
from chromaflow.vjtree import chromatic_vjtree


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", default="512,1024,2048,4096",
                    help="comma-separated vertex counts")
    ap.add_argument("--seed", type=int, default=1007)
    ap.add_argument("--repeat", type=int, default=1,
                    help="runs per size; fastest is reported")
    args = ap.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    rng = random.Random(args.seed)
    print(f"{'n':>8} {'seconds':>10} {'ratio':>7} {'max coeff bits':>15}")
    prev = None
    for n in sizes:
        tree = random_caterpillar(rng, n)
        best = float("inf")
        poly = None
        for _ in range(args.repeat):
            t0 = time.perf_counter()
            poly = chromatic_vjtree(tree)
            best = min(best, time.perf_counter() - t0)
        bits = max(abs(c).bit_length() for c in poly.coeffs)
        ratio = f"{best / prev:7.2f}" if prev else f"{'-':>7}"
        print(f"{n:>8} {best:>10.3f} {ratio} {bits:>15}")
        prev = best


if __name__ == "__main__":
    main()

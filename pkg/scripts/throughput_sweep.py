"""Sweep distillation throughput over worker counts and block sizes.

The headline configuration is N = 1e8 bits compressed to l = 1e7 at
gamma = 756839; smaller sizes help when iterating on the kernels.

Usage:
    python3 scripts/throughput_sweep.py --in-bits 10000000 --workers 1 2 4
"""

import argparse
import os
import time

import numpy as np

from qpa import mersenne, pipeline


def run_once(params, workers: int, rng) -> float:
    x = rng.integers(0, 2, size=params.N, dtype=np.uint8)
    seed_bits = rng.integers(0, 2, size=pipeline.required_seed_bits(params),
                             dtype=np.uint8)
    seed = pipeline.seed_from_bits(seed_bits, params)
    start = time.perf_counter()
    out = pipeline.distill(x, seed, params, workers=workers,
                           all_ones_policy="zero")
    elapsed = time.perf_counter() - start
    assert len(out) == params.l
    return elapsed


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--in-bits", type=int, default=10 ** 7)
    parser.add_argument("--out-bits", type=int, default=None,
                        help="default: in-bits // 10")
    parser.add_argument("--gamma-exp", type=int, default=mersenne.DEFAULT_GAMMA)
    parser.add_argument("--workers", type=int, nargs="+",
                        default=[1, os.cpu_count() or 1])
    parser.add_argument("--rng-seed", type=int, default=0)
    args = parser.parse_args()

    out_bits = args.out_bits or max(1, args.in_bits // 10)
    params = pipeline.plan(args.in_bits, out_bits, args.gamma_exp)
    print(f"N = {params.N}, l = {params.l}, gamma = {params.gamma}, "
          f"n = {params.n}, m = {params.m}, l' = {params.l_prime}")
    rng = np.random.default_rng(args.rng_seed)
    for workers in args.workers:
        elapsed = run_once(params, workers, rng)
        print(f"workers {workers:3d}  wall {elapsed:8.2f} s  "
              f"{params.N / elapsed / 1e6:8.2f} Mbps")


if __name__ == "__main__":
    main()

"""Benchmark the transform engine across lengths and batch sizes.

Usage:
    python3 scripts/bench_ntt.py --rows 256 --repeats 3
"""

import argparse
import time

import numpy as np

from qpa import ntt


def bench(length: int, rows: int, repeats: int, rng) -> None:
    v = rng.integers(0, 1 << 63, size=(rows, length)).astype(np.uint64)
    ntt.ntt_forward(v[:1])  # warm the twiddle cache
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        spectrum = ntt.ntt_forward(v)
        back = ntt.ntt_inverse(spectrum)
        best = min(best, time.perf_counter() - start)
    assert np.array_equal(back, v)
    elems = rows * length
    print(f"length {length:6d}  rows {rows:5d}  round trip {best:8.3f} s  "
          f"{elems / best / 1e6:8.2f} Melem/s")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--rows", type=int, default=256)
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--rng-seed", type=int, default=0)
    args = parser.parse_args()
    rng = np.random.default_rng(args.rng_seed)
    for length in ntt.SUPPORTED_LENGTHS:
        bench(length, args.rows, args.repeats, rng)


if __name__ == "__main__":
    main()

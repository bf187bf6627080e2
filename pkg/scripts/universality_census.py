"""Empirical check of the universality bound by exhaustive seed census.

For small gamma the full seed space Z_p^(n+m-1) can be enumerated, so
the collision fraction for random distinct input pairs can be compared
against the p^(n-1) bound directly.

Usage:
    python3 scripts/universality_census.py --gamma-exp 3 --n 2 --m 2 --pairs 50
"""

import argparse

import numpy as np

from qpa import oracle


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--gamma-exp", type=int, default=3)
    parser.add_argument("--n", type=int, default=2)
    parser.add_argument("--m", type=int, default=2)
    parser.add_argument("--pairs", type=int, default=50)
    parser.add_argument("--rng-seed", type=int, default=0)
    args = parser.parse_args()

    p = (1 << args.gamma_exp) - 1
    seeds = p ** (args.n + args.m - 1)
    bound = p ** (args.n - 1)
    rng = np.random.default_rng(args.rng_seed)
    print(f"gamma = {args.gamma_exp}, p = {p}, n = {args.n}, m = {args.m}: "
          f"{seeds} seeds, bound {bound}")

    worst = 0
    done = 0
    while done < args.pairs:
        x1 = tuple(int(v) for v in rng.integers(0, p, size=args.n))
        x2 = tuple(int(v) for v in rng.integers(0, p, size=args.n))
        if x1 == x2:
            continue
        count = oracle.collision_census(args.gamma_exp, args.n, args.m, x1, x2)
        status = "ok" if count <= bound else "VIOLATION"
        worst = max(worst, count)
        done += 1
        print(f"  {x1} vs {x2}: {count} collisions ({status})")
    print(f"worst case {worst} / bound {bound} over {args.pairs} pairs")


if __name__ == "__main__":
    main()

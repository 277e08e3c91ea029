"""No set pair escapes the distance window.

The per-symbol average Hamming distance between any two sets of given
rates is pinned to [phi, 1 - phi].  This script samples random pairs,
plots how tightly they cluster around 1/2, and shows the window collapsing
as the rates grow.
"""

import math
import random

from hyperrect import CubeSet, avg_distance_bounds, pair_distance_profile, phi


def main() -> None:
    n = 12
    rng = random.Random(2)
    print(f"random pairs on the {n}-cube:")
    print(f"{'|A|':>5} {'|B|':>5} {'lower':>8} {'average':>9} {'upper':>8}")
    for _ in range(8):
        size_a = rng.randint(1, 1 << n)
        size_b = rng.randint(1, 1 << n)
        a = CubeSet(n, tuple(rng.sample(range(1 << n), size_a)))
        b = CubeSet(n, tuple(rng.sample(range(1 << n), size_b)))
        avg = float(pair_distance_profile(a, b).average_distance()) / n
        lo, hi = avg_distance_bounds(math.log2(size_a) / n, math.log2(size_b) / n)
        print(f"{size_a:>5} {size_b:>5} {lo:>8.4f} {avg:>9.4f} {hi:>8.4f}")

    print()
    print("the window [phi, 1 - phi] closes as rates grow:")
    print(f"{'rate':>6} {'width':>8}")
    for i in range(1, 11):
        rate = i / 10.0
        print(f"{rate:>6.1f} {1.0 - 2.0 * phi(rate, rate):>8.4f}")
    print("  at full rates only average distance exactly n/2 is possible.")


if __name__ == "__main__":
    main()

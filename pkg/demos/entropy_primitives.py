"""Tour of the scalar building blocks: h, its inverse, star, and phi.

Everything downstream (exponents, thresholds, distance windows) is built
from these four functions, so this script prints small tables showing the
identities they satisfy.
"""

from hyperrect import binary_entropy, binary_entropy_inv, phi, star


def main() -> None:
    print("binary entropy and its inverse (bits)")
    print(f"{'p':>6} {'h(p)':>10} {'h_inv(h(p))':>12}")
    for i in range(1, 10):
        p = i / 20.0
        h = binary_entropy(p)
        print(f"{p:>6.2f} {h:>10.6f} {binary_entropy_inv(h):>12.6f}")

    print()
    print("star is the bias of an XOR of independent biased bits:")
    print("  p * 0   =", star(0.3, 0.0), " (identity)")
    print("  p * 1/2 =", star(0.3, 0.5), " (absorbing)")
    print("  1/4 * 1/4 =", star(0.25, 0.25))

    print()
    print("phi(x, y) = h_inv(x) * h_inv(y), the smallest possible")
    print("per-symbol average distance between sets of rates x and y:")
    print(f"{'x':>5} {'y':>5} {'phi':>10}")
    for x, y in ((0.0, 0.7), (0.3, 0.3), (0.5, 0.9), (1.0, 1.0)):
        print(f"{x:>5.1f} {y:>5.1f} {phi(x, y):>10.6f}")
    print()
    print("phi(1, 1) = 1/2: two full cubes sit at average distance n/2.")


if __name__ == "__main__":
    main()

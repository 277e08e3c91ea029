"""The sphere exponent across correlation strengths.

For fixed rates, prints the concentric-sphere exponent as rho sweeps from
independence toward full correlation, together with the optimizing
normalized distance d*.  The exponent interpolates from (1-alpha)+(1-beta)
at rho = 0 down to 0 at full rates, and d* travels from 1/2 toward phi.
"""

from hyperrect import phi, sphere_exponent, thm1_expansion, thm2_expansion


def main() -> None:
    alpha = beta = 0.5
    print(f"alpha = beta = {alpha}, concentric centers")
    print(f"{'rho':>6} {'exponent':>12} {'d*':>10}")
    for i in range(10):
        rho = i / 10.0
        bound = sphere_exponent(alpha, beta, rho)
        print(f"{rho:>6.2f} {bound.value:>12.6f} {bound.d_opt:>10.6f}")
    print(f"  phi(alpha, beta) = {phi(alpha, beta):.6f} (d* limit as rho -> 1)")

    print()
    print("small-rho expansion vs exact (error is O(rho^2)):")
    print(f"{'rho':>7} {'exact':>12} {'expansion':>12} {'error':>11}")
    for rho in (0.2, 0.1, 0.05, 0.025):
        exact = sphere_exponent(alpha, beta, rho).value
        approx = thm2_expansion(alpha, beta, rho).value
        print(f"{rho:>7.3f} {exact:>12.6f} {approx:>12.6f} {abs(exact - approx):>11.2e}")

    print()
    print("large-rho expansion vs exact (error is o(1 - rho)):")
    print(f"{'1-rho':>7} {'exact':>12} {'expansion':>12} {'error':>11}")
    for eps in (0.2, 0.1, 0.05, 0.025):
        exact = sphere_exponent(alpha, beta, 1.0 - eps).value
        approx = thm1_expansion(alpha, 1.0 - eps).value
        print(f"{eps:>7.3f} {exact:>12.6f} {approx:>12.6f} {abs(exact - approx):>11.2e}")

    print()
    print("anti-concentric centers never help the sender pair:")
    for rho in (0.3, 0.6, 0.9):
        same = sphere_exponent(alpha, beta, rho, centers="same").value
        opposite = sphere_exponent(alpha, beta, rho, centers="opposite").value
        print(f"  rho={rho}: same {same:.6f} <= opposite {opposite:.6f}")


if __name__ == "__main__":
    main()

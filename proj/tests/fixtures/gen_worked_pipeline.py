#!/usr/bin/env python3
"""Regenerates worked_pipeline.txt from first principles with exact fractions.

Two components of genera 2 and 3 meeting in one node, canonical polarization,
rank s = 2, degree d = 2, k = 1. The catalog is a brute force over a generous
integer box; nothing here shares code with the C++ library.
"""
import sys
from fractions import Fraction
from itertools import product

GENERA = (2, 3)
S, D, K = 2, 2, 1


def fmt(q):
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def main():
    gamma = len(GENERA)
    delta = gamma - 1
    pa = sum(GENERA) + delta - gamma + 1
    node_degrees = (1, 1)
    eta = tuple(Fraction(2 * g - 2 + n, 2 * pa - 2) for g, n in zip(GENERA, node_degrees))

    # the only split: B = {C_1}; chi(O_B) = 1 - g_1
    rk = eta[0]
    delta_b = (1 - GENERA[0]) - rk * (1 - pa)
    lower = rk * D - S * delta_b
    upper = rk * D + S * (1 - delta_b)

    catalog = []
    for d1, d2 in product(range(-50, 51), repeat=2):
        if d1 + d2 == D and lower < d1 < upper:
            catalog.append((d1, d2))
    small = [t for t in catalog if all(0 < x <= S for x in t)]

    chosen = small[0]
    coefficient = abs(D + S * (1 - pa))
    radius = min(chosen[0] - lower, upper - chosen[0]) / (coefficient * 1)

    r = S + K
    beta = r * r * (pa - 1) + 1 - K * (K - D + r * (pa - 1))
    dim_x = S * S * (pa - 1) + 1
    h1 = D + S * (pa - 1)
    fiber = K * (h1 - K)

    lines = [
        f"arithmetic_genus: {pa}",
        "eta: " + ",".join(fmt(w) for w in eta),
        f"split_delta: {fmt(delta_b)}",
        f"lower: {fmt(lower)}",
        f"upper: {fmt(upper)}",
        "catalog: " + " ".join("(" + ",".join(map(str, t)) + ")" for t in catalog),
        "small_slope: " + " ".join("(" + ",".join(map(str, t)) + ")" for t in small),
        "radius: " + fmt(radius),
        f"r: {r}",
        f"beta: {beta}",
        f"dim_X: {dim_x}",
        f"h1_F_dual: {h1}",
        f"fiber_dim: {fiber}",
        "dimension_identity: " + ("pass" if beta == dim_x + fiber else "fail"),
    ]
    text = "\n".join(lines) + "\n"
    if len(sys.argv) > 1:
        with open(sys.argv[1], "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


if __name__ == "__main__":
    main()

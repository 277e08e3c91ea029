"""Scalar primitives on the binary alphabet: entropy, its inverse, the
binary convolution, and a few special functions used by the exponent and
hypercontractivity modules.

Conventions shared by the whole package:

* Entropies, rates and exponents are in bits (base-2 logarithms).  The
  only natural-log quantities live inside the hypercontractivity solver
  and are labeled as nats there.
* ``0 * log(0) = 0`` everywhere.
* Impossible or empty quantities are the IEEE ``-inf`` sentinel
  (:data:`NEG_INF`), never a large negative float.
"""

from __future__ import annotations

import math

__all__ = [
    "NEG_INF",
    "LN2",
    "binary_entropy",
    "binary_entropy_inv",
    "star",
    "phi",
    "log_binomial",
    "v_func",
    "g_func",
]

NEG_INF = float("-inf")
LN2 = math.log(2.0)

# Bisection on [0, 1/2] halves the interval each pass, so 43 passes reach
# the pinned absolute tolerance 1e-13 in p (0.5 / 2**43 < 1e-13).
_INV_BISECTIONS = 43

# math.comb is exact for all n, so the cutoff only bounds the cost of
# taking log2 of a huge integer; beyond it the lgamma route is cheaper
# and agrees to ~1e-12 relative.
_EXACT_COMB_LIMIT = 64


def binary_entropy(p: float) -> float:
    """Binary entropy h(p) in bits, with h(0) = h(1) = 0."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"probability must lie in [0, 1], got {p!r}")
    if p == 0.0 or p == 1.0:
        return 0.0
    return -(p * math.log2(p) + (1.0 - p) * math.log2(1.0 - p))


def binary_entropy_inv(y: float) -> float:
    """Inverse of the binary entropy restricted to [0, 1/2].

    Uses plain bisection to absolute tolerance 1e-13 in p.  Bisection is
    deliberate: it is monotone and derivative-free, so it cannot be thrown
    off near p = 0 where h' diverges.
    """
    if not 0.0 <= y <= 1.0:
        raise ValueError(f"entropy value must lie in [0, 1], got {y!r}")
    if y == 0.0:
        return 0.0
    if y == 1.0:
        return 0.5
    lo, hi = 0.0, 0.5
    for _ in range(_INV_BISECTIONS):
        mid = 0.5 * (lo + hi)
        if binary_entropy(mid) < y:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def star(p: float, q: float) -> float:
    """Binary convolution p * (1-q) + q * (1-p).

    Equals (1 - (1-2p)(1-2q)) / 2; the product form makes associativity
    and the fixed point at 1/2 obvious.
    """
    for value in (p, q):
        if not 0.0 <= value <= 1.0:
            raise ValueError(f"probability must lie in [0, 1], got {value!r}")
    return 0.5 * (1.0 - (1.0 - 2.0 * p) * (1.0 - 2.0 * q))


def phi(x: float, y: float) -> float:
    """Convolution of entropy inverses: h_inv(x) * h_inv(y) under `star`.

    Jointly convex on the unit square, symmetric, with phi(x, 0) = h_inv(x)
    and phi(x, 1) = 1/2.
    """
    return star(binary_entropy_inv(x), binary_entropy_inv(y))


def log_binomial(n: int, k: int, strict: bool = True) -> float:
    """log2 of C(n, k).

    Out-of-range k raises ValueError when ``strict``; otherwise it returns
    ``NEG_INF`` so vanishing terms drop out of log-domain sums.  Small n
    goes through exact integer arithmetic; large n through lgamma.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n!r}")
    if k < 0 or k > n:
        if strict:
            raise ValueError(f"k={k!r} outside [0, {n}]")
        return NEG_INF
    if n <= _EXACT_COMB_LIMIT:
        return math.log2(math.comb(n, k))
    return (
        math.lgamma(n + 1.0) - math.lgamma(k + 1.0) - math.lgamma(n - k + 1.0)
    ) / LN2


def v_func(t: float) -> float:
    """(1 - 2t) / ln((1-t)/t) on the open interval (0, 1/2).

    Increasing from 0 toward the removable limit 1/2 at t = 1/2; both
    endpoints are rejected rather than patched.
    """
    if not 0.0 < t < 0.5:
        raise ValueError(f"argument must lie strictly inside (0, 1/2), got {t!r}")
    return (1.0 - 2.0 * t) / math.log((1.0 - t) / t)


def g_func(y: float) -> float:
    """(y^2 - 1)/y - 2 ln y for y >= 1; nonnegative, zero only at y = 1."""
    if y < 1.0:
        raise ValueError(f"argument must be >= 1, got {y!r}")
    return (y * y - 1.0) / y - 2.0 * math.log(y)

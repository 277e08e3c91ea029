"""One-dimensional maximization for the concave objectives in this package."""

from __future__ import annotations

import math
from typing import Callable

__all__ = ["golden_section_maximize"]

_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0
_INV_PHI_SQ = (3.0 - math.sqrt(5.0)) / 2.0


def golden_section_maximize(
    fn: Callable[[float], float],
    lo: float,
    hi: float,
    tol: float = 1e-10,
    max_iter: int = 200,
) -> tuple[float, float]:
    """Maximize a concave function on [lo, hi]; returns (argmax, max).

    The endpoints are always evaluated as candidates, since a linear term
    in the objective can push the optimum onto the boundary.
    """
    if not lo <= hi:
        raise ValueError(f"empty interval [{lo!r}, {hi!r}]")
    if tol <= 0.0:
        raise ValueError(f"tolerance must be positive, got {tol!r}")
    best_x, best_f = lo, fn(lo)
    f_hi = fn(hi)
    if f_hi > best_f:
        best_x, best_f = hi, f_hi
    width = hi - lo
    if width <= tol:
        return best_x, best_f

    a, b = lo, hi
    c = a + _INV_PHI_SQ * width
    d = a + _INV_PHI * width
    fc, fd = fn(c), fn(d)
    for _ in range(max_iter):
        if b - a <= tol:
            break
        if fc >= fd:
            b, d, fd = d, c, fc
            c = a + _INV_PHI_SQ * (b - a)
            fc = fn(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INV_PHI * (b - a)
            fd = fn(d)
    for x, f in ((c, fc), (d, fd)):
        if f > best_f:
            best_x, best_f = x, f
    return best_x, best_f

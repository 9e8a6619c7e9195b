"""Derivative-free one-dimensional search helpers."""

from __future__ import annotations

import math
from typing import Callable

INV_PHI = (math.sqrt(5) - 1) / 2


def golden_section(f: Callable[[float], float], a: float, b: float, tol: float = 1e-8,
                   max_iter: int = 200) -> tuple[float, float]:
    """Minimise ``f`` on [a, b]; returns the best (x, f(x)) seen, endpoints included."""
    best = min(((a, f(a)), (b, f(b))), key=lambda t: t[1])
    c = b - INV_PHI * (b - a)
    d = a + INV_PHI * (b - a)
    fc, fd = f(c), f(d)
    for _ in range(max_iter):
        if b - a <= tol:
            break
        if fc <= fd:
            b, d, fd = d, c, fc
            c = b - INV_PHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + INV_PHI * (b - a)
            fd = f(d)
    for cand in ((c, fc), (d, fd)):
        if cand[1] < best[1]:
            best = cand
    return best


def bisect_sign(is_below: Callable[[float], bool], lo: float, hi: float, tol: float = 1e-10,
                max_iter: int = 200) -> float:
    """Locate the switch point of a monotone predicate.

    Requires ``is_below(lo)`` false and ``is_below(hi)`` true; returns the
    midpoint of the final bracket, which is narrower than ``tol``.
    """
    if is_below(lo) or not is_below(hi):
        raise ValueError(f"predicate does not switch on [{lo}, {hi}]")
    for _ in range(max_iter):
        if hi - lo <= tol:
            break
        mid = 0.5 * (lo + hi)
        if is_below(mid):
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)

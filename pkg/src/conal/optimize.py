"""Derivative-free scalar minimization helpers."""

from __future__ import annotations

import math

__all__ = ["golden_section", "minimize_periodic"]

_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0
_INV_PHI_SQ = (3.0 - math.sqrt(5.0)) / 2.0


def golden_section(f, a: float, b: float, tol: float = 1e-8) -> tuple[float, float]:
    """Golden-section search for the minimum of a unimodal ``f`` on ``[a, b]``.

    Returns ``(x, f(x))`` at the midpoint of the final bracket, whose width
    is at most ``tol``.
    """
    a, b = min(a, b), max(a, b)
    h = b - a
    if h <= tol:
        x = (a + b) / 2
        return x, f(x)
    n = int(math.ceil(math.log(tol / h) / math.log(_INV_PHI)))
    c = a + _INV_PHI_SQ * h
    d = a + _INV_PHI * h
    yc = f(c)
    yd = f(d)
    for _ in range(n - 1):
        h *= _INV_PHI
        if yc < yd:
            b, d, yd = d, c, yc
            c = a + _INV_PHI_SQ * h
            yc = f(c)
        else:
            a, c, yc = c, d, yd
            d = a + _INV_PHI * h
            yd = f(d)
    x = (a + d) / 2 if yc < yd else (c + b) / 2
    return x, f(x)


def minimize_periodic(
    f, period: float = 2.0 * math.pi, samples: int = 64, tol: float = 1e-8
) -> tuple[float, float]:
    """Global minimum of a periodic scalar function.

    Coarse grid scan over one period to bracket the minimum, then
    golden-section refinement inside the bracketing cell.
    """
    step = period / samples
    xs = [k * step for k in range(samples)]
    ys = [f(x) for x in xs]
    k = min(range(samples), key=ys.__getitem__)
    return golden_section(f, xs[k] - step, xs[k] + step, tol)

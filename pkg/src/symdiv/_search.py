"""Scalar search routines shared by the Chernoff, L-curve and inverse solvers."""
import math

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


def golden_section_min(func, lo, hi, tol=1e-12, max_iter=200):
    """Minimize a unimodal ``func`` on ``[lo, hi]``.

    Returns ``(x_min, f_min)``. The endpoints are never evaluated, only
    interior probe points, so ``func`` may be singular at ``lo``/``hi``.
    """
    a, b = float(lo), float(hi)
    c = b - INV_PHI * (b - a)
    d = a + INV_PHI * (b - a)
    fc, fd = func(c), func(d)
    it = 0
    while b - a > tol and it < max_iter:
        if fc <= fd:
            b, d, fd = d, c, fc
            c = b - INV_PHI * (b - a)
            fc = func(c)
        else:
            a, c, fc = c, d, fd
            d = a + INV_PHI * (b - a)
            fd = func(d)
        it += 1
    if fc <= fd:
        return c, fc
    return d, fd


def bisect_increasing(func, target, lo, hi, tol=1e-12, max_iter=200):
    """Solve ``func(x) = target`` for a nondecreasing ``func`` on ``[lo, hi]``.

    ``func(hi)`` may be ``inf``. If ``target`` lies above ``func`` on the whole
    bracket the result converges to ``hi``.
    """
    a, b = float(lo), float(hi)
    it = 0
    while b - a > tol and it < max_iter:
        mid = 0.5 * (a + b)
        if mid <= a or mid >= b:
            break
        if func(mid) < target:
            a = mid
        else:
            b = mid
        it += 1
    return 0.5 * (a + b)

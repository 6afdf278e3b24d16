"""Tight bounds on symmetric divergences at a fixed total variation distance.

Every function takes the total variation distance ``epsilon`` and returns a
value in nats (the Bhattacharyya coefficient bounds are dimensionless).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from ._search import bisect_increasing, golden_section_min
from .dist import Distribution
from .errors import EpsilonOutOfRange, NotSymmetric, ParameterOutOfRange
from .fdiv import FDivergenceSpec, is_symmetric


def _check_epsilon(epsilon, closed=True):
    eps = float(epsilon)
    ok = 0.0 <= eps <= 1.0 if closed else 0.0 <= eps < 1.0
    if not ok:
        interval = "[0, 1]" if closed else "[0, 1)"
        raise EpsilonOutOfRange(f"epsilon must lie in {interval}, got {epsilon}")
    return eps


class PairKind(str, Enum):
    TWO_ELEMENT = "two_element"
    THREE_ELEMENT = "three_element"


@dataclass(frozen=True)
class ExtremalPair:
    p: Distribution
    q: Distribution
    kind: PairKind
    epsilon: float


def make_extremal_pair(epsilon: float, kind="two_element") -> ExtremalPair:
    """The pair attaining the bounds at total variation ``epsilon``.

    ``two_element`` is ((1-e)/2, (1+e)/2) against its mirror image and attains
    every minimum in this module plus the Bhattacharyya upper bound.
    ``three_element`` is (e, 1-e, 0) against (0, 1-e, e) and attains the
    Bhattacharyya lower bound.
    """
    eps = _check_epsilon(epsilon)
    kind = PairKind(kind)
    if kind is PairKind.TWO_ELEMENT:
        lo, hi = (1.0 - eps) / 2.0, (1.0 + eps) / 2.0
        p, q = Distribution([lo, hi]), Distribution([hi, lo])
    else:
        p = Distribution([eps, 1.0 - eps, 0.0])
        q = Distribution([0.0, 1.0 - eps, eps])
    return ExtremalPair(p, q, kind, eps)


def symmetric_fdiv_infimum(spec: FDivergenceSpec, epsilon: float) -> float:
    """Infimum of a symmetric f-divergence over pairs at total variation ``epsilon``."""
    eps = _check_epsilon(epsilon, closed=False)
    if not is_symmetric(spec):
        raise NotSymmetric(f"{spec.name} is not a symmetric f-divergence")
    if eps == 0.0:
        return 0.0
    ratio = (1.0 + eps) / (1.0 - eps)
    value = (1.0 - eps) * float(spec(np.array([ratio]))[0]) - 2.0 * spec.f_prime_at_1 * eps
    return max(0.0, value)


def bhattacharyya_bounds(epsilon: float):
    """``(lower, upper)`` bounds on the Bhattacharyya coefficient."""
    eps = _check_epsilon(epsilon)
    return 1.0 - eps, math.sqrt((1.0 - eps) * (1.0 + eps))


def chernoff_min(epsilon: float) -> float:
    eps = _check_epsilon(epsilon)
    if eps == 1.0:
        return math.inf
    return -0.5 * math.log1p(-eps * eps)


def binary_entropy(p: float) -> float:
    if not 0.0 <= p <= 1.0:
        raise ParameterOutOfRange(f"p must lie in [0, 1], got {p}")
    h = 0.0
    for x in (p, 1.0 - p):
        if x > 0.0:
            h -= x * math.log(x)
    return h


def bernoulli_kl(p: float, q: float) -> float:
    """Relative entropy between Bernoulli(p) and Bernoulli(q), ``0 log 0 = 0``."""
    if not 0.0 <= p <= 1.0:
        raise ParameterOutOfRange(f"p must lie in [0, 1], got {p}")
    if not 0.0 < q < 1.0:
        raise ParameterOutOfRange(f"q must lie in (0, 1), got {q}")
    d = 0.0
    if p > 0.0:
        d += p * math.log(p / q)
    if p < 1.0:
        d += (1.0 - p) * math.log((1.0 - p) / (1.0 - q))
    return max(0.0, d)


def capacitory_min(epsilon: float) -> float:
    eps = _check_epsilon(epsilon)
    return 2.0 * bernoulli_kl((1.0 - eps) / 2.0, 0.5)


def jeffreys_min(epsilon: float) -> float:
    eps = _check_epsilon(epsilon, closed=False)
    if eps == 0.0:
        return 0.0
    return eps * math.log1p(2.0 * eps / (1.0 - eps))


def jeffreys_min_given_kl(kl_value: float) -> float:
    """Infimum of Jeffreys' divergence over pairs with ``D(P||Q) = kl_value``.

    This is an infimum only: no pair attains it.
    """
    x = float(kl_value)
    if not (x > 0.0 and math.isfinite(x)):
        raise ParameterOutOfRange(f"relative entropy must be positive and finite, got {kl_value}")
    return x / 2.0


def jeffreys_epsilon_solver(x: float, tol: float = 1e-12) -> float:
    """The unique ``epsilon`` in [0, 1) with ``jeffreys_min(epsilon) = x``."""
    x = float(x)
    if not (x >= 0.0 and math.isfinite(x)):
        raise ParameterOutOfRange(f"x must be finite and nonnegative, got {x}")
    if x == 0.0:
        return 0.0
    return bisect_increasing(jeffreys_min, x, 0.0, 1.0, tol=tol)


@dataclass(frozen=True)
class LCurvePoint:
    epsilon: float
    value: float
    beta_opt: float


BETA_MARGIN = 1e-12


def l_curve_objective(beta, epsilon):
    """Relative entropy of the 2-element pair indexed by ``beta``.

    The pair is p = ((1+e-b)/2, (1-e+b)/2), q = p - (e, -e). Works on scalars
    and numpy arrays; a zero coefficient kills its log term.
    """
    eps = epsilon
    beta = np.asarray(beta, dtype=float)
    c1 = (eps + 1.0 - beta) / 2.0
    c2 = (beta + 1.0 - eps) / 2.0
    with np.errstate(divide="ignore", invalid="ignore"):
        t1 = c1 * np.log1p(2.0 * eps / (1.0 - eps - beta))
        r = -2.0 * eps / (1.0 + eps + beta)
        log2 = np.where(r > -0.5, np.log1p(r), np.log((beta + 1.0 - eps) / (beta + 1.0 + eps)))
        t2 = np.where(c2 > 0.0, c2 * log2, 0.0)
    out = t1 + t2
    return float(out) if out.ndim == 0 else out


def _l_curve_scalar(beta, eps):
    c1 = (eps + 1.0 - beta) / 2.0
    c2 = (beta + 1.0 - eps) / 2.0
    t = c1 * math.log1p(2.0 * eps / (1.0 - eps - beta))
    if c2 > 0.0:
        r = -2.0 * eps / (1.0 + eps + beta)
        if r > -0.5:
            t += c2 * math.log1p(r)
        else:
            t += c2 * math.log((beta + 1.0 - eps) / (beta + 1.0 + eps))
    return t


def l_curve(epsilon: float, tol: float = 1e-10, grid_points: int = 10_000) -> LCurvePoint:
    """Minimum relative entropy over all pairs at total variation ``epsilon``.

    Golden-section search over ``beta`` in [epsilon - 1, 0]. The objective is
    convex in ``beta`` (relative entropy is jointly convex and the pair is
    affine in ``beta``); a ``grid_points`` scan guards the result anyway and
    restarts the search around the grid minimum if it is lower by over 1e-8.
    Pass ``grid_points=0`` to skip the scan.
    """
    eps = _check_epsilon(epsilon, closed=False)
    if eps == 0.0:
        return LCurvePoint(0.0, 0.0, 0.0)
    lo, hi = eps - 1.0 + BETA_MARGIN, -BETA_MARGIN

    def obj(b):
        return _l_curve_scalar(b, eps)

    if lo >= hi:
        # interval narrower than the margins; the left endpoint is the limit
        return LCurvePoint(eps, obj(eps - 1.0), eps - 1.0)

    beta, value = golden_section_min(obj, lo, hi, tol=tol)
    # near eps = 1 the minimizer sits within ~1e-20 of eps - 1, inside the
    # clamp margin; the endpoint limit is then the better value
    for end in (eps - 1.0, 0.0):
        v = obj(end)
        if v < value:
            beta, value = end, v
    if grid_points:
        grid = np.linspace(lo, hi, grid_points)
        vals = l_curve_objective(grid, eps)
        k = int(np.argmin(vals))
        if vals[k] < value - 1e-8:
            a, b = grid[max(k - 1, 0)], grid[min(k + 1, grid_points - 1)]
            beta, value = golden_section_min(obj, a, b, tol=tol)
            if vals[k] < value:
                beta, value = float(grid[k]), float(vals[k])
    return LCurvePoint(eps, max(0.0, value), beta)


def l_curve_inverse(target: float, tol: float = 1e-10) -> float:
    """``epsilon`` with ``l_curve(epsilon).value == target``.

    Targets beyond what double precision resolves near epsilon = 1 return a
    value within ``tol`` of 1.
    """
    x = float(target)
    if not (x >= 0.0 and math.isfinite(x)):
        raise ParameterOutOfRange(f"target must be finite and nonnegative, got {target}")
    if x == 0.0:
        return 0.0

    def value(e):
        return l_curve(e, grid_points=0).value

    return bisect_increasing(value, x, 0.0, 1.0, tol=tol)


def topsoe_series(epsilon: float, terms: int) -> float:
    """Partial sum of ``sum_nu epsilon^(2 nu) / (nu (2 nu - 1))``."""
    eps = float(epsilon)
    if not 0.0 <= eps <= 1.0:
        raise ParameterOutOfRange(f"epsilon must lie in [0, 1], got {epsilon}")
    if int(terms) != terms or terms < 1:
        raise ParameterOutOfRange(f"terms must be a positive integer, got {terms}")
    e2 = eps * eps
    return math.fsum(e2**nu / (nu * (2 * nu - 1)) for nu in range(1, int(terms) + 1))

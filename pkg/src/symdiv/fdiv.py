"""f-divergences and the related non-f-divergence measures.

All values are in nats. Infinite divergences come back as ``math.inf``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np
from scipy.special import logsumexp, rel_entr

from ._search import golden_section_min
from .dist import DistLike, aligned
from .errors import LambdaOutOfRange, NotConvex, ParameterOutOfRange

LOG2 = math.log(2.0)


@dataclass(frozen=True)
class FDivergenceSpec:
    """A convex generator ``f`` with ``f(1) = 0`` plus its limit values.

    ``f`` must accept numpy arrays of positive reals. ``f_at_zero`` is
    ``lim_{t->0+} f(t)`` and ``slope_at_infinity`` is ``lim_{u->inf} f(u)/u``;
    either may be ``math.inf``.
    """

    f: Callable[[np.ndarray], np.ndarray]
    f_at_zero: float
    slope_at_infinity: float
    f_prime_at_1: float
    name: str = "f"

    def __post_init__(self):
        f1 = float(self.f(np.array([1.0]))[0])
        if abs(f1) > 1e-12:
            raise ParameterOutOfRange(f"{self.name}: f(1) = {f1}, expected 0")
        # midpoint convexity on a log grid; slack scales with |f|
        x = np.logspace(-3, 3, 241)
        fx = self.f(x)
        mid = self.f(0.5 * (x[:-1] + x[1:]))
        chord = 0.5 * (fx[:-1] + fx[1:])
        slack = 1e-9 * np.maximum(1.0, np.abs(chord))
        if np.any(mid > chord + slack):
            raise NotConvex(f"{self.name}: generator fails midpoint convexity")

    def __call__(self, t):
        return self.f(np.asarray(t, dtype=float))


def _kl_f(t):
    return t * np.log(t)


def _kl_dual_f(t):
    return -np.log(t)


def _jeffreys_f(t):
    return 0.5 * (t - 1.0) * np.log(t)


def _hellinger_f(t):
    return (np.sqrt(t) - 1.0) ** 2


def _capacitory_f(t):
    return t * np.log(t) - (t + 1.0) * np.log1p(t) + 2.0 * LOG2


def _tv_f(t):
    return 0.5 * np.abs(t - 1.0)


KL = FDivergenceSpec(_kl_f, 0.0, math.inf, 1.0, "kl")
KL_DUAL = FDivergenceSpec(_kl_dual_f, math.inf, 0.0, -1.0, "kl_dual")
JEFFREYS = FDivergenceSpec(_jeffreys_f, math.inf, math.inf, 0.0, "jeffreys")
HELLINGER_SQ = FDivergenceSpec(_hellinger_f, 1.0, 1.0, 0.0, "hellinger_sq")
CAPACITORY = FDivergenceSpec(_capacitory_f, 2.0 * LOG2, 0.0, -LOG2, "capacitory")
# f'(1) is undefined for |t-1|/2; 0 is the subgradient that makes it symmetric
TOTAL_VARIATION = FDivergenceSpec(_tv_f, 0.5, 0.5, 0.0, "total_variation")

BUILTIN_SPECS = {s.name: s for s in (KL, KL_DUAL, JEFFREYS, HELLINGER_SQ, CAPACITORY, TOTAL_VARIATION)}


def f_divergence(spec: FDivergenceSpec, p: DistLike, q: DistLike, pad: bool = True) -> float:
    """``sum_x q(x) f(p(x)/q(x))`` with the usual zero-mass conventions.

    A symbol with ``p = q = 0`` contributes nothing, ``q = 0 < p`` contributes
    ``p * slope_at_infinity`` and ``p = 0 < q`` contributes ``q * f_at_zero``.
    """
    a, b = aligned(p, q, pad)
    both = (a > 0) & (b > 0)
    only_p = (a > 0) & (b == 0)
    only_q = (a == 0) & (b > 0)

    terms = (b[both] * spec(a[both] / b[both])).tolist()
    if only_p.any():
        if math.isinf(spec.slope_at_infinity):
            return math.inf
        terms.append(spec.slope_at_infinity * math.fsum(a[only_p].tolist()))
    if only_q.any():
        if math.isinf(spec.f_at_zero):
            return math.inf
        terms.append(spec.f_at_zero * math.fsum(b[only_q].tolist()))
    return max(0.0, math.fsum(terms))


def is_symmetric(spec: FDivergenceSpec, a: Optional[float] = None, tol: float = 1e-10) -> bool:
    """Check ``f(u) = u f(1/u) + a (u - 1)`` on a log grid over ``[1e-4, 1e4]``.

    ``a`` defaults to ``2 f'(1)``. The tolerance is relative to the magnitude of
    the terms being compared, floored at an absolute ``tol``.
    """
    if a is None:
        a = 2.0 * spec.f_prime_at_1
    u = np.logspace(-4, 4, 801)
    lhs = spec(u)
    rhs = u * spec(1.0 / u) + a * (u - 1.0)
    scale = np.maximum(1.0, np.maximum(np.abs(lhs), np.abs(rhs)))
    return bool(np.all(np.abs(lhs - rhs) <= tol * scale))


def kl(p: DistLike, q: DistLike, pad: bool = True) -> float:
    """Relative entropy D(p||q)."""
    a, b = aligned(p, q, pad)
    return max(0.0, math.fsum(rel_entr(a, b).tolist()))


def kl_dual(p: DistLike, q: DistLike, pad: bool = True) -> float:
    return kl(q, p, pad)


def jeffreys(p: DistLike, q: DistLike, pad: bool = True) -> float:
    """Arithmetic mean of the two directed relative entropies."""
    return 0.5 * (kl(p, q, pad) + kl(q, p, pad))


def hellinger_sq(p: DistLike, q: DistLike, pad: bool = True) -> float:
    a, b = aligned(p, q, pad)
    return math.fsum(((np.sqrt(a) - np.sqrt(b)) ** 2).tolist())


def capacitory(p: DistLike, q: DistLike, pad: bool = True) -> float:
    """Capacitory discrimination (twice the Jensen-Shannon divergence)."""
    a, b = aligned(p, q, pad)
    m = 0.5 * (a + b)
    return max(0.0, math.fsum(rel_entr(a, m).tolist()) + math.fsum(rel_entr(b, m).tolist()))


def bhattacharyya_coefficient(p: DistLike, q: DistLike, pad: bool = True) -> float:
    a, b = aligned(p, q, pad)
    return min(1.0, math.fsum(np.sqrt(a * b).tolist()))


def bhattacharyya_distance(p: DistLike, q: DistLike, pad: bool = True) -> float:
    z = bhattacharyya_coefficient(p, q, pad)
    if z == 0.0:
        return math.inf
    return max(0.0, -math.log(z))


def _log_affinity(a, b):
    """Return ``lambda -> log sum p^lambda q^(1-lambda)`` over the common support.

    ``None`` when the supports are disjoint.
    """
    common = (a > 0) & (b > 0)
    if not common.any():
        return None
    la, lb = np.log(a[common]), np.log(b[common])

    def g(lam):
        return float(logsumexp(lam * la + (1.0 - lam) * lb))

    return g


def renyi_divergence(p: DistLike, q: DistLike, lam: float, pad: bool = True) -> float:
    """Renyi divergence of order ``lam`` in (0, 1)."""
    if not 0.0 < lam < 1.0:
        raise LambdaOutOfRange(f"Renyi order must lie in (0, 1), got {lam}")
    g = _log_affinity(*aligned(p, q, pad))
    if g is None:
        return math.inf
    return max(0.0, g(lam) / (lam - 1.0))


@dataclass(frozen=True)
class ChernoffResult:
    """Chernoff information (nats) and the minimizing exponent.

    ``lambda_opt`` is NaN when the supports are disjoint and ``value`` is inf.
    """

    value: float
    lambda_opt: float


def chernoff_information(p: DistLike, q: DistLike, pad: bool = True, tol: float = 1e-12) -> ChernoffResult:
    """``-min_{lambda in [0,1]} log sum p^lambda q^(1-lambda)``.

    The log-affinity is convex in lambda, so golden-section search on the unit
    interval finds the global minimizer.
    """
    g = _log_affinity(*aligned(p, q, pad))
    if g is None:
        return ChernoffResult(math.inf, math.nan)
    lam, g_min = golden_section_min(g, 0.0, 1.0, tol=tol)
    return ChernoffResult(max(0.0, -g_min), lam)

"""Brute-force check of the closed-form bounds over small-support pairs.

Pairs (p, q) are drawn from the simplex grid ``{k / steps}`` on 2 or 3
symbols. Among the pairs whose total variation distance is within half a grid
cell of ``epsilon`` the sweep finds the extremal value of a measure, refines
once on the doubled grid around the witness, and checks every visited pair
against the closed form evaluated at that pair's own distance.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.special import rel_entr

from . import bounds
from ._search import INV_PHI
from .dist import Distribution
from .errors import EpsilonOutOfRange, ParameterOutOfRange, UnknownMeasure
from .fdiv import HELLINGER_SQ

DEFAULT_GRID_STEPS = {2: 200, 3: 40}
VALIDITY_EPS = 1e-12
# relative window inside which two values count as tied
_TIE_RTOL = 1e-13


@lru_cache(maxsize=8)
def _compositions(support, steps):
    if support == 2:
        i = np.arange(steps + 1)
        return np.stack([i, steps - i], axis=1)
    rows = [(i, j, steps - i - j) for i in range(steps + 1) for j in range(steps + 1 - i)]
    return np.array(rows, dtype=np.int64)


@lru_cache(maxsize=8)
def _tv_matrix(support, steps):
    comps = _compositions(support, steps)
    # integer L1 distance; exact
    return np.abs(comps[:, None, :] - comps[None, :, :]).sum(axis=2)


def _chernoff_rows(a, b, iters=80):
    """Vectorized Chernoff information, one value per row of ``a``/``b``."""
    common = (a > 0) & (b > 0)
    with np.errstate(divide="ignore"):
        la = np.where(common, np.log(np.where(common, a, 1.0)), 0.0)
        lb = np.where(common, np.log(np.where(common, b, 1.0)), 0.0)

    def g(lam):
        z = np.where(common, np.exp(lam[:, None] * la + (1.0 - lam[:, None]) * lb), 0.0)
        with np.errstate(divide="ignore"):
            return np.log(z.sum(axis=1))

    n = a.shape[0]
    lo, hi = np.zeros(n), np.ones(n)
    r = INV_PHI
    c, d = hi - r * (hi - lo), lo + r * (hi - lo)
    fc, fd = g(c), g(d)
    for _ in range(iters):
        left = fc <= fd
        hi = np.where(left, d, hi)
        lo = np.where(left, lo, c)
        new_c = hi - r * (hi - lo)
        new_d = lo + r * (hi - lo)
        c, d = np.where(left, new_c, d), np.where(left, c, new_d)
        fc_old, fd_old = fc, fd
        probe = np.where(left, c, d)
        fp = g(probe)
        fc = np.where(left, fp, fd_old)
        fd = np.where(left, fc_old, fp)
    out = -np.minimum(fc, fd)
    out = np.maximum(out, 0.0)
    out[~common.any(axis=1)] = math.inf
    return out


def _kl_rows(a, b):
    return rel_entr(a, b).sum(axis=1)


def _jeffreys_rows(a, b):
    return 0.5 * (_kl_rows(a, b) + _kl_rows(b, a))


def _capacitory_rows(a, b):
    m = 0.5 * (a + b)
    return rel_entr(a, m).sum(axis=1) + rel_entr(b, m).sum(axis=1)


def _bhattacharyya_rows(a, b):
    return np.sqrt(a * b).sum(axis=1)


def _hellinger_rows(a, b):
    return ((np.sqrt(a) - np.sqrt(b)) ** 2).sum(axis=1)


def _l_curve_value(eps):
    return bounds.l_curve(eps).value if eps < 1.0 else math.inf


def _jeffreys_bound(eps):
    return bounds.jeffreys_min(eps) if eps < 1.0 else math.inf


def _hellinger_bound(eps):
    return bounds.symmetric_fdiv_infimum(HELLINGER_SQ, eps) if eps < 1.0 else 2.0


@dataclass(frozen=True)
class _Measure:
    rows: object
    bound: object
    kind: str  # "min": value >= bound, "max": value <= bound


MEASURES = {
    "chernoff": _Measure(_chernoff_rows, bounds.chernoff_min, "min"),
    "capacitory": _Measure(_capacitory_rows, bounds.capacitory_min, "min"),
    "jeffreys": _Measure(_jeffreys_rows, _jeffreys_bound, "min"),
    "kl": _Measure(_kl_rows, _l_curve_value, "min"),
    "hellinger_sq": _Measure(_hellinger_rows, _hellinger_bound, "min"),
    "bhattacharyya_min": _Measure(_bhattacharyya_rows, lambda e: bounds.bhattacharyya_bounds(e)[0], "min"),
    "bhattacharyya_max": _Measure(_bhattacharyya_rows, lambda e: bounds.bhattacharyya_bounds(e)[1], "max"),
}


@dataclass(frozen=True)
class OracleReport:
    measure: str
    epsilon: float
    support: int
    grid_steps: int
    extremum: str
    closed_form: float
    oracle_value: float
    witness_p: Distribution
    witness_q: Distribution
    gap: float
    tolerance: float
    pairs_checked: int
    violations: int

    @property
    def oracle_min(self):
        return self.oracle_value

    @property
    def valid(self):
        return self.violations == 0

    @property
    def tight(self):
        return self.gap <= self.tolerance

    @property
    def ok(self):
        return self.valid and self.tight

    def summary(self):
        lines = [
            f"measure        {self.measure}",
            f"epsilon        {self.epsilon!r}",
            f"support        {self.support}",
            f"grid_steps     {self.grid_steps}",
            f"closed_form    {self.closed_form:.12g}",
            f"oracle_{self.extremum}     {self.oracle_value:.12g}",
            f"witness_p      {[round(x, 12) for x in self.witness_p]}",
            f"witness_q      {[round(x, 12) for x in self.witness_q]}",
            f"gap            {self.gap:.3e} (tolerance {self.tolerance:.3e})",
            f"pairs_checked  {self.pairs_checked}",
            f"violations     {self.violations}",
            f"validity       {'PASS' if self.valid else 'FAILURE'}",
            f"tightness      {'PASS' if self.tight else 'FAILURE'}",
        ]
        return "\n".join(lines)


def _bounds_at(measure, tv_values):
    uniq, inv = np.unique(tv_values, return_inverse=True)
    vals = np.array([measure.bound(float(min(t, 1.0))) for t in uniq])
    return vals[inv]


def _scan(measure, a_int, b_int, steps, epsilon):
    """Evaluate pairs given as integer compositions of ``steps``.

    Returns (values, violations) with values already oriented so that smaller
    is better.
    """
    a, b = a_int / steps, b_int / steps
    tv = np.abs(a_int - b_int).sum(axis=1) / (2.0 * steps)
    vals = measure.rows(a, b)
    bnd = _bounds_at(measure, tv)
    if measure.kind == "min":
        bad = vals < bnd - VALIDITY_EPS
        score = vals
    else:
        bad = vals > bnd + VALIDITY_EPS
        score = -vals
    return score, int(bad.sum())


def _pick(score, a_int, b_int):
    """Index of the best score; ties go to the lexicographically smallest pair."""
    best = np.min(score)
    if math.isinf(best):
        window = score == best
    else:
        window = score <= best + _TIE_RTOL * max(1.0, abs(best))
    idx = np.nonzero(window)[0]
    keys = np.concatenate([a_int[idx], b_int[idx]], axis=1)
    order = np.lexsort(keys.T[::-1])
    return int(idx[order[0]])


def _neighbourhood(center, steps, radius=2):
    """Compositions of ``steps`` within ``radius`` of ``center`` in each coordinate."""
    k = center.size
    offsets = np.array(np.meshgrid(*[np.arange(-radius, radius + 1)] * (k - 1), indexing="ij"))
    offsets = offsets.reshape(k - 1, -1).T
    last = -offsets.sum(axis=1, keepdims=True)
    offsets = np.concatenate([offsets, last], axis=1)
    pts = center[None, :] + offsets
    keep = np.all(pts >= 0, axis=1) & (np.abs(last[:, 0]) <= radius)
    return pts[keep]


def sweep_pairs(support: int, epsilon: float, grid_steps=None, measure: str = "chernoff") -> OracleReport:
    """Brute-force extremum of ``measure`` over grid pairs at distance ``epsilon``."""
    if measure not in MEASURES:
        raise UnknownMeasure(f"unknown measure {measure!r}; choose from {sorted(MEASURES)}")
    if support not in (2, 3):
        raise ParameterOutOfRange(f"support must be 2 or 3, got {support}")
    eps = float(epsilon)
    if not 0.0 < eps < 1.0:
        raise EpsilonOutOfRange(f"epsilon must lie in (0, 1), got {epsilon}")
    steps = DEFAULT_GRID_STEPS[support] if grid_steps is None else int(grid_steps)
    if steps < 10:
        raise ParameterOutOfRange(f"grid_steps must be at least 10, got {grid_steps}")
    m = MEASURES[measure]

    comps = _compositions(support, steps)
    l1 = _tv_matrix(support, steps)
    # |tv - eps| <= 1/(2 steps)  <=>  |l1 - 2 eps steps| <= 1
    i, j = np.nonzero(np.abs(l1 - 2.0 * eps * steps) <= 1.0 + 1e-9)
    a_int, b_int = comps[i], comps[j]
    score, violations = _scan(m, a_int, b_int, steps, eps)
    k = _pick(score, a_int, b_int)
    checked = len(score)

    # one refinement round on the doubled grid around the witness
    fine = 2 * steps
    pa = _neighbourhood(2 * a_int[k], fine)
    pb = _neighbourhood(2 * b_int[k], fine)
    ra = np.repeat(pa, len(pb), axis=0)
    rb = np.tile(pb, (len(pa), 1))
    keep = np.abs(np.abs(ra - rb).sum(axis=1) - 2.0 * eps * fine) <= 1.0 + 1e-9
    ra, rb = ra[keep], rb[keep]
    # express the coarse witness on the fine grid so both sets compare on one scale
    ra = np.concatenate([2 * a_int[k : k + 1], ra])
    rb = np.concatenate([2 * b_int[k : k + 1], rb])
    rscore, rviol = _scan(m, ra, rb, fine, eps)
    violations += rviol
    checked += len(rscore) - 1
    r = _pick(rscore, ra, rb)

    value = float(rscore[r] if m.kind == "min" else -rscore[r])
    closed = float(m.bound(eps))
    wp, wq = Distribution(ra[r] / fine), Distribution(rb[r] / fine)
    gap = abs(value - closed) if math.isfinite(value) or math.isfinite(closed) else 0.0
    return OracleReport(
        measure=measure,
        epsilon=eps,
        support=support,
        grid_steps=steps,
        extremum=m.kind,
        closed_form=closed,
        oracle_value=value,
        witness_p=wp,
        witness_q=wq,
        gap=gap,
        tolerance=2.0 / steps,
        pairs_checked=checked,
        violations=violations,
    )

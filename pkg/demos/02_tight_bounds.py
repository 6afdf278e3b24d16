"""Closed-form minima at a fixed total variation and the pairs that reach them.

Run: python3 demos/02_tight_bounds.py
"""
import numpy as np

from symdiv import (
    JEFFREYS,
    bhattacharyya_bounds,
    bhattacharyya_coefficient,
    capacitory,
    capacitory_min,
    chernoff_information,
    chernoff_min,
    jeffreys,
    jeffreys_min,
    make_extremal_pair,
    symmetric_fdiv_infimum,
    total_variation,
)

print(f"{'eps':>5} {'C_min':>10} {'attained':>10} {'JS_min':>10} {'attained':>10} {'J_min':>10} {'attained':>10}")
for eps in np.linspace(0.1, 0.9, 5):
    pair = make_extremal_pair(eps)
    assert abs(total_variation(pair.p, pair.q) - eps) < 1e-15
    print(
        f"{eps:5.2f} {chernoff_min(eps):10.6f} {chernoff_information(pair.p, pair.q).value:10.6f}"
        f" {capacitory_min(eps):10.6f} {capacitory(pair.p, pair.q):10.6f}"
        f" {jeffreys_min(eps):10.6f} {jeffreys(pair.p, pair.q):10.6f}"
    )

# the generic formula for symmetric f-divergences gives the Jeffreys column too
print("\ngeneric infimum for Jeffreys at 0.5:", symmetric_fdiv_infimum(JEFFREYS, 0.5))

# Bhattacharyya: the upper end needs two atoms, the lower end three
eps = 0.5
lo, hi = bhattacharyya_bounds(eps)
two = make_extremal_pair(eps, "two_element")
three = make_extremal_pair(eps, "three_element")
print(f"\nBhattacharyya range at {eps}: [{lo:.6f}, {hi:.6f}]")
print(f"  two-element pair   {bhattacharyya_coefficient(two.p, two.q):.6f}")
print(f"  three-element pair {bhattacharyya_coefficient(three.p, three.q):.6f}")

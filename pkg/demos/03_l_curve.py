"""The smallest relative entropy at a given total variation, against Chernoff.

Near zero the ratio L/C approaches 4; the Jeffreys minimum inverts exactly.

Run: python3 demos/03_l_curve.py
"""
from symdiv import capacitory_min, chernoff_min, jeffreys_epsilon_solver, jeffreys_min, l_curve, l_curve_inverse
from symdiv.bounds import topsoe_series

print(f"{'eps':>8} {'C(eps)':>12} {'L(eps)':>12} {'L/C':>8} {'beta*':>10}")
for eps in (1e-3, 0.01, 0.1, 0.3, 0.5, 0.7, 0.9, 0.99):
    pt = l_curve(eps)
    c = chernoff_min(eps)
    print(f"{eps:8.3g} {c:12.6g} {pt.value:12.6g} {pt.value / c:8.4f} {pt.beta_opt:10.6f}")

print("\nround trips")
for eps in (0.01, 0.1, 0.5, 0.9):
    back_l = l_curve_inverse(l_curve(eps).value)
    back_j = jeffreys_epsilon_solver(jeffreys_min(eps))
    print(f"  eps={eps:<5} L^-1(L(eps))={back_l:.12f}  J^-1(J(eps))={back_j:.12f}")

print("\npower series for the capacitory minimum")
for terms in (1, 5, 50, 500):
    print(f"  {terms:4d} terms at 0.9: {topsoe_series(0.9, terms):.12f} (closed form {capacitory_min(0.9):.12f})")

"""How far the distribution induced by a code's lengths is from the source.

Run: python3 demos/04_source_coding.py
"""
import math

from symdiv import UdCode, analyze, shannon_code
from symdiv.coding import l1_bounds_from_redundancy


def show(title, code):
    rep = analyze(code)
    print(f"{title}: d={code.d}, lengths={list(code.lengths)}")
    for name, value in rep.rows():
        print(f"  {name:16s} {value}")
    print()


show("Shannon code", shannon_code([0.4, 0.3, 0.3], d=2))
show("dyadic source", shannon_code([0.5, 0.25, 0.125, 0.125], d=2))
show("decimal code", UdCode(10, [1, 1], [0.9, 0.1]))

# with small redundancy the Jeffreys-based bound beats Pinsker's by about sqrt(2)
print(f"{'delta':>8} {'csiszar':>10} {'kl_tight':>10} {'jeffreys':>10} {'ratio':>8}")
for delta in (1e-5, 1e-4, 1e-3, 1e-2, 0.1):
    b = l1_bounds_from_redundancy(delta, 10)
    print(f"{delta:8.0e} {b.csiszar:10.6f} {b.kl_tight:10.6f} {b.jeffreys_tight:10.6f} {b.csiszar / b.jeffreys_tight:8.5f}")
print(f"sqrt(2) = {math.sqrt(2):.5f}")

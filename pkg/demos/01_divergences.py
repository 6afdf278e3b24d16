"""Divergences between two shifted coins.

Run: python3 demos/01_divergences.py
"""
from symdiv import (
    bhattacharyya_coefficient,
    capacitory,
    chernoff_information,
    hellinger_sq,
    jeffreys,
    kl,
    total_variation,
)

p = [0.25, 0.75]
q = [0.75, 0.25]

print(f"P = {p}, Q = {q}")
print(f"total variation      {total_variation(p, q):.6f}")
print(f"KL(P||Q)             {kl(p, q):.6f}")
print(f"Jeffreys             {jeffreys(p, q):.6f}")
print(f"capacitory           {capacitory(p, q):.6f}")
print(f"squared Hellinger    {hellinger_sq(p, q):.6f}")
print(f"Bhattacharyya coeff  {bhattacharyya_coefficient(p, q):.6f}")

res = chernoff_information(p, q)
# for a mirror-image pair the optimal exponent sits at the midpoint
print(f"Chernoff information {res.value:.6f} at lambda = {res.lambda_opt:.6f}")

# disjoint supports: Chernoff is infinite and no optimal lambda exists
res = chernoff_information([1, 0], [0, 1])
print(f"disjoint pair        {res.value} (lambda {res.lambda_opt})")

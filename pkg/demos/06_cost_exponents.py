"""Where the associativity walk beats Grover, as a function of |M| = n^alpha."""

import numpy as np

from magmalab.cost import (
    group_quantum_exponent,
    misc_bounds,
    semigroup_cost_optimum,
    semigroup_exponent,
    semigroup_exponent_numeric,
)

print("alpha  regime   beta*   exponent  numeric")
for alpha in (0, 0.05, 1 / 6, 0.25, 3 / 8, 0.5):
    res = semigroup_exponent(alpha)
    beta = "   -  " if res.beta_star is None else f"{res.beta_star:.4f}"
    print(f"{alpha:.3f}  {res.regime.value:<7} {beta}  {res.exponent:.5f}   {semigroup_exponent_numeric(alpha)[1]:.5f}")

ns = np.array([2**j for j in range(10, 19, 2)])
costs = np.array([semigroup_cost_optimum(int(n), 1)[1] for n in ns])
print(f"\nfitted slope of the concrete cost for |M|=1: {np.polyfit(np.log(ns), np.log(costs), 1)[0]:.3f}")

q = group_quantum_exponent()
print(f"group testing: r = n^{q.beta_star:.4f} gives n^{q.exponent:.4f} log n")

print("\nproblem      lower  upper")
for b in misc_bounds():
    low = "  ?  " if b.lower is None else f"{b.lower:.3f}"
    print(f"{b.problem:<11} {low}  {b.upper:.3f}{' log n' if b.upper_log else ''}")

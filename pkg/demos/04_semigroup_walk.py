"""Associativity testing by walking over pairs of subsets."""

import numpy as np

from magmalab.adversary import gen_semigroup_family
from magmalab.algebra import associativity_witnesses
from magmalab.instances import single_witness_table
from magmalab.oracle import CountingOracle
from magmalab.quantum.semigroup import count_marked_pairs, marked_fraction_bound, semigroup_walk_emulation, semigroup_walk_costs
from magmalab.quantum.walks import classical_walk_cost, mnrs_cost

t = single_witness_table(12)
print("witnesses:", associativity_witnesses(t).tolist(), " codomain:", sorted(t.codomain))

# the fraction of (A, B) pairs whose database exposes the witness
for r in (3, 5, 7, 9):
    c = count_marked_pairs(t, r)
    print(f"r={r}: eps={c.epsilon:.4f} ({c.marked}/{c.total})  lower bound {marked_fraction_bound(12, 2, r):.4f}")

costs = semigroup_walk_costs(12, 2, 5)
print(f"\nper-operation costs s={costs.s} u={costs.u} c={costs.c}, delta={costs.delta}, eps>={costs.eps:.3f}")
print(f"quantum walk search {mnrs_cost(costs):.0f}  vs  classical walk {classical_walk_cost(costs):.0f}  vs  n^3 = {12**3}")

runs = [semigroup_walk_emulation(CountingOracle(t), t.codomain, 5, seed, reference=t) for seed in range(200)]
found = [r for r in runs if r.verdict == "NotSemigroup"]
print(f"\nclassical emulation: detected in {len(found)}/200 runs, mean real reads {np.mean([r.queries for r in runs]):.0f}")
print("witness from one run:", found[0].extra["witness"], " database consistent:", all(r.extra["consistent"] for r in runs))

ok = gen_semigroup_family(12, 3, "A")
rec = semigroup_walk_emulation(CountingOracle(ok), ok.codomain, 5, 0)
print(f"an associative table: {rec.verdict}, charged {rec.extra['charged']} = budget {rec.extra['classical_budget']}")

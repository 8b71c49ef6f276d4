"""Is a monoid a group? Count the table reads it takes to find out."""

import math

import numpy as np

from magmalab.group_test import GroupTestParams, default_params, group_test_randomized, naive_group_test
from magmalab.instances import cyclic_group, monoid_with_absorber, nilpotent_monoid
from magmalab.oracle import CountingOracle

# --- the naive baseline reads rows until it meets the identity ---
for n in (16, 64, 256):
    rec = naive_group_test(CountingOracle(cyclic_group(n)), 0)
    print(f"naive    Z_{n:<4} {rec.verdict:<14} {rec.queries:>7} queries  (n^2 = {n * n})")

# --- the two-phase test: short power sequences, then random row scans ---
print()
for n in (16, 64, 256):
    p = default_params(n)
    q = [group_test_randomized(CountingOracle(cyclic_group(n)), 0, GroupTestParams(p.r, p.trials, s)).queries for s in range(200)]
    print(f"two-phase Z_{n:<4} r={p.r:<3} mean {np.mean(q):8.1f}  max {max(q):6d}  budget 2n^1.5 = {2 * n**1.5:8.1f}")

# --- a non-invertible element repeats its powers before reaching e ---
print()
for make in (monoid_with_absorber, nilpotent_monoid):
    t = make(25)
    rec = group_test_randomized(CountingOracle(t), 0, default_params(25))
    print(f"{make.__name__:<22} {rec.verdict:<10} phase {rec.extra['rejected_in_phase']}  {rec.queries} queries")

# with r = 1 only phase 2 is left; it has to hit the absorber by chance
n, trials = 25, 5
rate = np.mean(
    [group_test_randomized(CountingOracle(monoid_with_absorber(n)), 0, GroupTestParams(1, trials, s)).verdict == "NotGroup" for s in range(4000)]
)
print(f"\nphase-2 only: rejection rate {rate:.3f}, predicted {1 - (1 - 1 / n) ** trials:.3f}")
print(f"sqrt(n) balances n*r against n^2/r: r* = {math.sqrt(n):.0f}")

"""Bit-flip adversary counts and the reductions they rest on."""

import numpy as np

from magmalab.adversary import (
    compute_adversary_bound,
    gen_semigroup_family,
    has_one_column,
    one_column_adversary,
    reduce_identity,
    reduce_loop,
    semigroup_adversary,
)
from magmalab.algebra import Side, find_identity, is_associative, is_loop
from magmalab.tableio import format_table

print(format_table(gen_semigroup_family(6, 2, "B", 3, 4), comment="one planted cell breaks associativity"))
print(is_associative(gen_semigroup_family(6, 2, "B", 3, 4)).note)

for n in (6, 8, 10):
    b = compute_adversary_bound(semigroup_adversary(n))
    print(f"semigroup n={n:2d}: m={b.m:3d} m'={b.m_prime}  sqrt(m m')={b.bound:.1f}")
for n in (3, 4, 5):
    b = compute_adversary_bound(one_column_adversary(n))
    print(f"one column n={n}: m={b.m} m'={b.m_prime}")
b = compute_adversary_bound(one_column_adversary(9, sample=100, seed=1))
print(f"one column n=9 (sampled): m={b.m} m'={b.m_prime}")

m = np.array([[1, 0, 1], [0, 1, 1], [1, 1, 1]])
t = reduce_identity(m)
print("\n" + format_table(t, comment="right identity of this table <=> all-ones column"))
print("has one column:", has_one_column(m), " right identity:", find_identity(t, Side.RIGHT))

print("\nloop reduction of the identity matrix is a loop:", is_loop(reduce_loop(np.eye(4, dtype=int))).holds)
print("order 2 oddity, anti-identity also gives a loop:", is_loop(reduce_loop(np.array([[0, 1], [1, 0]]))).holds)

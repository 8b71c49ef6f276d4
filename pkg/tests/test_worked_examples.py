"""Small worked cases with hand-derivable answers."""

import math

import numpy as np
import pytest

from magmalab.adversary import (
    AdversaryFamily,
    compute_adversary_bound,
    gen_one_column_family,
    gen_semigroup_family,
    reduce_identity,
    reduce_loop,
)
from magmalab.algebra import MagmaTable, Side, element_order, find_identity, is_quasigroup
from magmalab.cost import group_randomized_cost, semigroup_cost
from magmalab.group_test import default_params
from magmalab.instances import cyclic_group, monoid_with_absorber, single_witness_table
from magmalab.quantum.search import grover_run
from magmalab.quantum.semigroup import count_marked_pairs, semigroup_walk_costs
from magmalab.quantum.walks import WalkCosts, mnrs_cost


def test_order_in_z4_from_generator():
    r = element_order(cyclic_group(4), 1)
    assert r.powers == (1, 2, 3, 0, 1)
    assert (r.s, r.t, r.identity_power) == (1, 5, 4)


def test_idempotent_and_absorbing_elements():
    assert (lambda r: (r.s, r.t))(element_order(monoid_with_absorber(4), 3)) == (1, 2)
    left_zero = MagmaTable([[0, 0], [1, 1]])
    assert (lambda r: (r.s, r.t))(element_order(left_zero, 1)) == (1, 2)


def test_all_zero_table_has_no_identity():
    t = MagmaTable(np.zeros((3, 3), dtype=int))
    assert all(find_identity(t, side) is None for side in Side)


def test_a_family_is_not_a_quasigroup():
    assert not is_quasigroup(gen_semigroup_family(5, 2, "A")).holds


@pytest.mark.parametrize("n, r, trials", [(16, 4, 4), (1, 1, 1), (100, 10, 10)])
def test_default_params(n, r, trials):
    p = default_params(n)
    assert (p.r, p.trials) == (r, trials)


def test_grover_values():
    assert grover_run(64, [5], 6)[0] == pytest.approx(math.sin(13 * math.asin(1 / 8)) ** 2, abs=1e-12)
    assert grover_run(64, [5], 6)[0] == pytest.approx(0.9966, abs=1e-4)
    assert grover_run(16, range(16), 0)[0] == pytest.approx(1.0)


def test_full_subsets_mark_everything():
    t = single_witness_table(7)
    assert count_marked_pairs(t, t.n - t.k).epsilon == 1.0


def test_mnrs_degenerate_and_semigroup_scale():
    assert mnrs_cost(WalkCosts(7, 0, 0, 1, 1)) == 7
    n, k, r = 10**4, 1, 100
    expr = r**2 + (n / r) * (math.sqrt(r) * r + math.sqrt(n * r) * k)
    ratio = mnrs_cost(semigroup_walk_costs(n, k, r)) / expr
    assert 1 <= ratio <= 2


def test_concrete_cost_at_beta_half():
    # (r+k)^2 + (2n/r)(sqrt(r)(r+k) + k sqrt(nr)) at n=10^4, k=1, r=100
    assert semigroup_cost(10**4, 1, 100) == pytest.approx(412201)
    assert semigroup_cost(10**4, 1, 100) / 10**5 == pytest.approx(4.12201)


def test_randomized_group_cost_degenerate():
    assert group_randomized_cost(1, 1) == 2


def test_unique_flip_family():
    fam = AdversaryFamily.from_sets([(1, 0, 0)], [(0, 0, 0)])
    b = compute_adversary_bound(fam)
    assert (b.m, b.m_prime, b.bound) == (1, 1, 1.0)


def test_flip_back_from_b_to_a():
    t = gen_semigroup_family(7, 3, "B", 4, 5)
    bits = t.entries.copy()
    bits[4, 5] = 0
    assert MagmaTable(bits, codomain={0, 1}) == gen_semigroup_family(7, 3, "A")


def test_one_column_flip_gives_other_side(rng):
    a, b = gen_one_column_family(5, "A"), gen_one_column_family(5, "B")
    x = np.array(a.sample(rng)).reshape(5, 5)
    col = int(np.flatnonzero(x.all(axis=0))[0])
    x[2, col] = 0
    assert b.contains(tuple(x.ravel()))


def test_identity_reduction_small_cases():
    ones = reduce_identity(np.ones((2, 2), dtype=int))
    right = [j for j in range(3) if all(ones(x, j) == x for x in range(3))]
    assert right == [1, 2]
    zeros = reduce_identity(np.zeros((3, 3), dtype=int))
    assert not zeros.entries.any() and find_identity(zeros, Side.RIGHT) is None


def test_loop_reduction_missing_value():
    m = np.eye(4, dtype=int)
    m[0, 0] = 0
    t = reduce_loop(m)
    assert 3 not in t.rows[0] and not is_quasigroup(t).holds

import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from magmalab.algebra import MagmaTable
from magmalab.group_test import (
    NOT_GROUP,
    PROBABLY_GROUP,
    GroupTestParams,
    PromiseViolation,
    default_params,
    group_test_randomized,
    naive_group_test,
)
from magmalab.instances import cyclic_group, monoid_with_absorber, nilpotent_monoid, relabel
from magmalab.oracle import CountingOracle, make_rng


def cyclic_phase1_queries(n, r):
    # a in Z_n has order n/gcd(a, n); phase 1 walks at most r-1 steps per element
    return sum(min(n // math.gcd(a, n) - 1, r - 1) for a in range(1, n))


def run(table, r, trials, seed=0, e=0):
    return group_test_randomized(CountingOracle(table), e, GroupTestParams(r, trials, seed))


def test_params_validation():
    with pytest.raises(ValueError):
        GroupTestParams(0, 1)
    with pytest.raises(ValueError):
        GroupTestParams(1, 0)
    assert default_params(16) == GroupTestParams(4, 4, 0)
    assert default_params(10, seed=5) == GroupTestParams(3, 4, 5)


def test_r_larger_than_n_rejected():
    with pytest.raises(ValueError):
        run(cyclic_group(3), 4, 1)


@pytest.mark.parametrize("n, r", [(6, 2), (9, 3), (12, 4), (16, 16)])
def test_phase1_query_count_on_cyclic(n, r):
    rec = run(cyclic_group(n), r, 1)
    assert rec.extra["phase1_queries"] == cyclic_phase1_queries(n, r)


def test_naive_query_count_on_cyclic():
    # row a finds 0 at column (n-a) mod n
    for n in (2, 5, 8):
        rec = naive_group_test(CountingOracle(cyclic_group(n)), 0)
        assert rec.verdict == "Group"
        assert rec.queries == 1 + (n - 1) * (n + 2) // 2


def test_naive_rejects_absorber():
    rec = naive_group_test(CountingOracle(monoid_with_absorber(4)), 0)
    assert rec.verdict == NOT_GROUP
    assert rec.queries == 1 + 3 + 2 + 4  # rows of Z_3 stop at 0; the absorber row is read in full


def test_absorber_rejected_in_phase1_when_r_at_least_2():
    for n in (4, 9, 16):
        rec = run(monoid_with_absorber(n), 2, 1)
        assert rec.verdict == NOT_GROUP and rec.extra["rejected_in_phase"] == 1
        assert rec.queries == (n - 2) + 1


def test_nilpotent_rejected():
    rec = run(nilpotent_monoid(6), 3, 2)
    assert rec.verdict == NOT_GROUP


def test_phase2_rejection_rate_matches_hit_probability():
    n, trials, reps = 8, 3, 4000
    table = monoid_with_absorber(n)
    rejects = sum(run(table, 1, trials, seed).verdict == NOT_GROUP for seed in range(reps))
    p = 1 - (1 - 1 / n) ** trials
    assert abs(rejects / reps - p) < 4 * math.sqrt(p * (1 - p) / reps)


def test_phase2_skips_certified_rows():
    # every element of Z_4 reaches 0 within 3 steps, so phase 2 is free
    rec = run(cyclic_group(4), 4, 10, seed=1)
    assert rec.queries == rec.extra["phase1_queries"]


def test_promise_violation_detected():
    # 0 is a left identity only; row 1 has 1*0 = 0
    t = MagmaTable([[0, 1], [0, 1]])
    with pytest.raises(PromiseViolation):
        run(t, 1, 4, seed=0)


def test_seed_replays_exactly():
    t = monoid_with_absorber(12)
    a = [run(t, 1, 4, s).queries for s in range(20)]
    assert a == [run(t, 1, 4, s).queries for s in range(20)]


@st.composite
def groups(draw):
    n = draw(st.integers(1, 30))
    perm = draw(st.permutations(range(n)))
    return relabel(cyclic_group(n), perm)


@given(groups(), st.data())
def test_groups_always_accepted_within_budget(g, data):
    n = g.n
    r = data.draw(st.integers(1, n))
    trials = data.draw(st.integers(1, 2 * n))
    seed = data.draw(st.integers(0, 2**32))
    rec = run(g, r, trials, seed, e=g.identity)
    assert rec.verdict == PROBABLY_GROUP
    assert rec.queries <= n * (r - 1) + trials * n


@given(st.integers(2, 400), st.integers(0, 2**20))
def test_default_budget_within_two_n_three_halves(n, seed):
    p = default_params(n, seed)
    assert n * (p.r - 1) + p.trials * n <= 2 * n**1.5


def test_rng_choice_is_uniform_enough():
    draws = make_rng(3).integers(0, 10, size=20000)
    counts = np.bincount(draws, minlength=10)
    assert counts.min() > 1800

import csv
import io

import pytest

from magmalab.instances import cyclic_group
from magmalab.oracle import (
    CSV_FIELDS,
    BudgetExhausted,
    CountingOracle,
    QueryIndexError,
    RunRecord,
    make_rng,
    spawn_seeds,
    to_csv,
)


def test_counts_every_read_without_memoization():
    o = CountingOracle(cyclic_group(5), log=True)
    assert o.query(2, 4) == 1
    assert o(2, 4) == 1
    assert o.count == 2
    assert o.log == [(2, 4), (2, 4)]
    assert o.snapshot() == {"n": 5, "queries": 2}
    o.reset()
    assert o.count == 0 and o.log == []


def test_budget():
    o = CountingOracle(cyclic_group(3), budget=2)
    o.query(0, 0)
    o.query(0, 1)
    with pytest.raises(BudgetExhausted):
        o.query(0, 2)
    assert o.count == 2


def test_out_of_range_query_is_not_charged():
    o = CountingOracle(cyclic_group(3))
    with pytest.raises(QueryIndexError):
        o.query(3, 0)
    assert o.count == 0


def test_csv_layout():
    rec = RunRecord("group-test", 9, "NotGroup", 14, seed=3, r=3, trials=3, wall_ms=0.5, extra={"x": 1})
    rows = list(csv.reader(io.StringIO(to_csv([rec], ("x",)))))
    assert tuple(rows[0]) == CSV_FIELDS + ("x",)
    assert rows[1] == ["group-test", "9", "", "3", "3", "3", "NotGroup", "14", "0.500", "1"]


def test_rng_determinism():
    assert make_rng(7).integers(0, 10**9, 5).tolist() == make_rng(7).integers(0, 10**9, 5).tolist()
    s = spawn_seeds(7, 4)
    assert s == spawn_seeds(7, 4) and len(set(s)) == 4
    assert spawn_seeds(7, 2) == s[:2]

"""Deciding whether a monoid is a group from its multiplication table.

``group_test_randomized`` is the two-phase power-sequence algorithm with
``n(r-1) + trials*n`` worst-case queries; ``naive_group_test`` scans every row
for the identity (at most ``n^2`` queries).
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

from magmalab.oracle import CountingOracle, RunRecord, make_rng

GROUP = "Group"
PROBABLY_GROUP = "ProbablyGroup"
NOT_GROUP = "NotGroup"


class PromiseViolation(ValueError):
    """The input was observed not to have ``e`` as identity."""


@dataclass(frozen=True)
class GroupTestParams:
    r: int
    trials: int
    seed: int = 0

    def __post_init__(self):
        if self.r < 1:
            raise ValueError(f"r must be >= 1, got {self.r}")
        if self.trials < 1:
            raise ValueError(f"trials must be >= 1, got {self.trials}")


def default_params(n: int, seed: int = 0) -> GroupTestParams:
    """``r = round(sqrt(n))`` balances the two phases; ``trials = ceil(n/r)``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    r = max(1, round(math.sqrt(n)))
    return GroupTestParams(r=r, trials=math.ceil(n / r), seed=seed)


def _scan_row(oracle: CountingOracle, a: int, e: int) -> bool:
    for x in range(oracle.n):
        v = oracle.query(a, x)
        if x == e and v != a:
            raise PromiseViolation(f"{a}*{e} = {v}, so {e} is not an identity")
        if v == e:
            return True
    return False


def _phase1(oracle: CountingOracle, e: int, r: int) -> tuple[bool, list[bool]]:
    """Compute ``a, a^2, ..., a^r`` for every ``a``.

    Returns ``(rejected, invertible)``. A power sequence that repeats before
    reaching ``e`` proves ``a`` has no inverse.
    """
    n = oracle.n
    invertible = [False] * n
    for a in range(n):
        if a == e:
            invertible[a] = True
            continue
        seen = {a}
        cur = a
        for _ in range(r - 1):
            cur = oracle.query(cur, a)
            if cur == e:
                invertible[a] = True
                break
            if cur in seen:
                return True, invertible
            seen.add(cur)
    return False, invertible


def group_test_randomized(oracle: CountingOracle, e: int, params: GroupTestParams) -> RunRecord:
    """Two-phase randomized test; groups are always accepted.

    Phase 2 draws ``params.trials`` elements uniformly with replacement and
    searches each row for ``e``. Elements certified invertible in phase 1 are
    not re-scanned.
    """
    n = oracle.n
    if params.r > n:
        raise ValueError(f"r={params.r} exceeds n={n}")
    if not 0 <= e < n:
        raise ValueError(f"identity {e} outside [0, {n})")
    start = time.perf_counter()
    q0 = oracle.count
    rejected, invertible = _phase1(oracle, e, params.r)
    phase1_queries = oracle.count - q0
    verdict = NOT_GROUP if rejected else PROBABLY_GROUP
    rejected_in = 1 if rejected else None
    if not rejected:
        rng = make_rng(params.seed)
        for a in rng.integers(0, n, size=params.trials):
            a = int(a)
            if invertible[a]:
                continue
            if not _scan_row(oracle, a, e):
                verdict = NOT_GROUP
                rejected_in = 2
                break
            invertible[a] = True
    return RunRecord(
        algorithm="group-test",
        n=n,
        verdict=verdict,
        queries=oracle.count - q0,
        seed=params.seed,
        r=params.r,
        trials=params.trials,
        wall_ms=(time.perf_counter() - start) * 1e3,
        extra={"phase1_queries": phase1_queries, "rejected_in_phase": rejected_in},
    )


def naive_group_test(oracle: CountingOracle, e: int) -> RunRecord:
    start = time.perf_counter()
    q0 = oracle.count
    verdict = GROUP
    for a in range(oracle.n):
        if not _scan_row(oracle, a, e):
            verdict = NOT_GROUP
            break
    return RunRecord(
        algorithm="naive-group-test",
        n=oracle.n,
        verdict=verdict,
        queries=oracle.count - q0,
        wall_ms=(time.perf_counter() - start) * 1e3,
    )

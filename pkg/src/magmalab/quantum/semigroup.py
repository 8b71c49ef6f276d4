"""The associativity walk: database D(A, B), marked pairs, and a classical emulation.

States are pairs ``(A, B)`` of ``r``-subsets of ``S \\ M``. A pair is marked
when some ``a in A u M``, ``b in B u M`` and ``c in S`` give
``(a*b)*c != a*(b*c)``.
"""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from magmalab.algebra import MagmaTable, associativity_witnesses
from magmalab.oracle import CountingOracle, RunRecord, make_rng
from magmalab.quantum.walks import CombinatorialBlowup, WalkCosts, classical_walk_cost, default_cap, mnrs_cost

SEMIGROUP = "Semigroup"
NOT_SEMIGROUP = "NotSemigroup"


@dataclass
class WalkDatabase:
    """All products ``a*b`` for ``a in A u M`` and ``b in B u M``."""

    A: set[int]
    B: set[int]
    M: frozenset[int]
    products: dict[tuple[int, int], int] = field(default_factory=dict)

    @classmethod
    def build(cls, read: Callable[[int, int], int], A, B, M) -> WalkDatabase:
        db = cls(set(A), set(B), frozenset(M))
        for a in db.rows():
            for b in db.cols():
                db.products[a, b] = read(a, b)
        return db

    def rows(self) -> set[int]:
        return self.A | self.M

    def cols(self) -> set[int]:
        return self.B | self.M

    def __len__(self) -> int:
        return len(self.products)

    def replace(self, read: Callable[[int, int], int], a_out: int, a_in: int, b_out: int, b_in: int) -> None:
        """Swap ``a_out -> a_in`` in A and ``b_out -> b_in`` in B."""
        self.A.remove(a_out)
        self.B.remove(b_out)
        for key in [key for key in self.products if key[0] == a_out or key[1] == b_out]:
            del self.products[key]
        self.A.add(a_in)
        self.B.add(b_in)
        for b in self.cols():
            self.products[a_in, b] = read(a_in, b)
        for a in self.rows():
            if (a, b_in) not in self.products:
                self.products[a, b_in] = read(a, b_in)

    def is_consistent(self, table: MagmaTable) -> bool:
        expected = {(a, b) for a in self.rows() for b in self.cols()}
        if set(self.products) != expected:
            return False
        return all(table(a, b) == v for (a, b), v in self.products.items())

    def find_violation(self, read: Callable[[int, int], int], n: int) -> tuple[int, int, int] | None:
        """Search ``(a, b, c)`` with ``a in A u M``, ``b in B u M``, ``c in S``."""
        for b in sorted(self.cols()):
            for c in range(n):
                bc = read(b, c)
                for a in sorted(self.rows()):
                    ab = self.products[a, b]
                    # a*(b*c): b*c lies in M, which is a column of the database
                    if read(ab, c) != self.products[a, bc]:
                        return a, b, c
        return None


@dataclass(frozen=True)
class MarkedCount:
    marked: int
    total: int

    @property
    def epsilon(self) -> float:
        return self.marked / self.total


def count_marked_pairs(table: MagmaTable, r: int, cap: int | None = None) -> MarkedCount:
    """Exhaustively count marked pairs ``(A, B)`` among all ``C(n-k, r)^2``."""
    n, k = table.n, table.k
    free = [x for x in range(n) if x not in table.codomain]
    if not 1 <= r <= len(free):
        raise ValueError(f"need 1 <= r <= n-k = {len(free)}, got r={r}")
    cap = default_cap() if cap is None else cap
    per_side = math.comb(n - k, r)
    if per_side * per_side > cap:
        raise CombinatorialBlowup(f"C({n - k}, {r})^2 = {per_side**2} exceeds cap {cap}")

    reach_row = [0] * n  # reach_row[a]: bitmask of b with some violating (a, b, c)
    for a, b, _ in associativity_witnesses(table):
        reach_row[a] |= 1 << int(b)
    m_mask = sum(1 << x for x in table.codomain)
    m_reach = 0
    for x in table.codomain:
        m_reach |= reach_row[x]

    subsets = [sum(1 << x for x in combo) for combo in itertools.combinations(free, r)]
    dtype = np.int64 if n < 63 else object
    a_reach = np.empty(per_side, dtype=dtype)
    for i, mask in enumerate(subsets):
        reach = m_reach
        x = mask
        while x:
            low = x & -x
            reach |= reach_row[low.bit_length() - 1]
            x ^= low
        a_reach[i] = reach
    b_full = np.array(subsets, dtype=dtype) | m_mask
    marked = int(np.count_nonzero(a_reach[:, None] & b_full[None, :]))
    return MarkedCount(marked, per_side * per_side)


def semigroup_marked_fraction(table: MagmaTable, r: int, cap: int | None = None) -> float:
    return count_marked_pairs(table, r, cap).epsilon


def marked_fraction_bound(n: int, k: int, r: int) -> float:
    """Lower bound ``((r-k)/(n-k))^2`` on the marked fraction when a witness exists."""
    return ((r - k) / (n - k)) ** 2


def semigroup_walk_costs(n: int, k: int, r: int) -> WalkCosts:
    """Setup ``(r+k)^2``, update ``r+k``, checking ``k*ceil(sqrt(n r))``, ``delta = 1/r``."""
    return WalkCosts(
        s=(r + k) ** 2,
        u=r + k,
        c=k * math.ceil(math.sqrt(n * r)),
        delta=1 / r,
        eps=marked_fraction_bound(n, k, r),
    )


def semigroup_walk_emulation(
    oracle: CountingOracle,
    codomain,
    r: int,
    seed: int,
    reference: MagmaTable | None = None,
) -> RunRecord:
    """Classical random-walk emulation of the associativity walk search.

    The walk checks once every ``ceil(1/delta)`` steps, for ``ceil(1/eps)``
    checks, which is the classical hitting-time schedule. ``queries`` holds
    the actual (cached) cell reads; ``extra["charged"]`` the cost charged
    with the per-operation prices of :func:`semigroup_walk_costs`, next to
    the classical budget and the quantum walk-search prediction.

    If ``reference`` is given, the database is compared with it after every
    step (without charging) and ``extra["consistent"]`` reports the result.
    """
    n = oracle.n
    M = frozenset(int(x) for x in codomain)
    k = len(M)
    if r <= 2 * k:
        raise ValueError(f"need r > 2k = {2 * k}, got r={r}")
    free = [x for x in range(n) if x not in M]
    if r > len(free):
        raise ValueError(f"need r <= n-k = {len(free)}, got r={r}")
    costs = semigroup_walk_costs(n, k, r)
    steps_per_check = math.ceil(1 / costs.delta)
    checks = math.ceil(1 / costs.eps)
    budget = costs.s + checks * (steps_per_check * costs.u + costs.c)

    start = time.perf_counter()
    q0 = oracle.count
    rng = make_rng(seed)
    cache: dict[tuple[int, int], int] = {}

    def read(i: int, j: int) -> int:
        v = cache.get((i, j))
        if v is None:
            v = cache[i, j] = oracle.query(i, j)
        return v

    def draw(size):
        return [free[i] for i in rng.choice(len(free), size=size, replace=False)]

    db = WalkDatabase.build(read, draw(r), draw(r), M)
    charged = costs.s
    consistent = db.is_consistent(reference) if reference is not None else None
    verdict = SEMIGROUP
    witness = None
    steps = 0
    done_checks = 0
    for _ in range(checks):
        for _ in range(steps_per_check):
            outside_a = [x for x in free if x not in db.A]
            outside_b = [x for x in free if x not in db.B]
            a_out = sorted(db.A)[int(rng.integers(len(db.A)))]
            b_out = sorted(db.B)[int(rng.integers(len(db.B)))]
            a_in = outside_a[int(rng.integers(len(outside_a)))] if outside_a else a_out
            b_in = outside_b[int(rng.integers(len(outside_b)))] if outside_b else b_out
            db.replace(read, a_out, a_in, b_out, b_in)
            charged += costs.u
            steps += 1
            if reference is not None:
                consistent = consistent and db.is_consistent(reference)
        charged += costs.c
        done_checks += 1
        witness = db.find_violation(read, n)
        if witness is not None:
            verdict = NOT_SEMIGROUP
            break

    return RunRecord(
        algorithm="semigroup-walk",
        n=n,
        verdict=verdict,
        queries=oracle.count - q0,
        seed=seed,
        k=k,
        r=r,
        trials=checks,
        wall_ms=(time.perf_counter() - start) * 1e3,
        extra={
            "charged": charged,
            "classical_budget": budget,
            "classical_formula": classical_walk_cost(costs),
            "mnrs_prediction": mnrs_cost(costs),
            "steps": steps,
            "checks": done_checks,
            "witness": witness,
            "consistent": consistent,
        },
    )

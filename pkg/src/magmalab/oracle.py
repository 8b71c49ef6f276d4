"""Counted access to a multiplication table.

Every algorithm in the package touches its input only through
:class:`CountingOracle`, so the reported query complexity is exact.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from magmalab.algebra import MagmaTable


class BudgetExhausted(RuntimeError):
    pass


class QueryIndexError(IndexError):
    pass


class CountingOracle:
    """Black-box access to a hidden table, one unit of cost per cell read.

    The oracle never memoizes: repeated reads of the same cell are charged
    again. Caching is the caller's business.
    """

    def __init__(self, table: MagmaTable, budget: int | None = None, log: bool = False):
        if budget is not None and budget < 0:
            raise ValueError("budget must be non-negative")
        self._table = table
        self._rows = table.rows
        self.budget = budget
        self.count = 0
        self.log: list[tuple[int, int]] | None = [] if log else None

    @property
    def n(self) -> int:
        return self._table.n

    def query(self, i: int, j: int) -> int:
        if self.budget is not None and self.count >= self.budget:
            raise BudgetExhausted(f"query budget {self.budget} exhausted")
        n = self._table.n
        if not (0 <= i < n and 0 <= j < n):
            raise QueryIndexError(f"cell ({i}, {j}) outside a {n}x{n} table")
        self.count += 1
        if self.log is not None:
            self.log.append((i, j))
        return self._rows[i][j]

    __call__ = query

    def reset(self) -> None:
        self.count = 0
        if self.log is not None:
            self.log.clear()

    def snapshot(self) -> dict[str, Any]:
        return {"n": self.n, "queries": self.count}


CSV_FIELDS = ("algorithm", "n", "k", "r", "trials", "seed", "verdict", "queries", "wall_ms")


@dataclass
class RunRecord:
    algorithm: str
    n: int
    verdict: str
    queries: int
    seed: int | None = None
    k: int | None = None
    r: int | None = None
    trials: int | None = None
    wall_ms: float = 0.0
    extra: dict[str, Any] = field(default_factory=dict)

    def row(self, extra_fields: tuple[str, ...] = ()) -> list[str]:
        values = [
            self.algorithm,
            self.n,
            self.k,
            self.r,
            self.trials,
            self.seed,
            self.verdict,
            self.queries,
            f"{self.wall_ms:.3f}",
        ]
        values += [self.extra.get(name) for name in extra_fields]
        return ["" if v is None else str(v) for v in values]


def write_csv(records, fh, extra_fields: tuple[str, ...] = (), header: bool = True) -> None:
    writer = csv.writer(fh, lineterminator="\n")
    if header:
        writer.writerow(CSV_FIELDS + tuple(extra_fields))
    for rec in records:
        writer.writerow(rec.row(extra_fields))


def to_csv(records, extra_fields: tuple[str, ...] = ()) -> str:
    buf = io.StringIO()
    write_csv(records, buf, extra_fields)
    return buf.getvalue()


def make_rng(seed: int) -> np.random.Generator:
    """Counter-based (Philox) generator; the same seed replays the same stream."""
    return np.random.Generator(np.random.Philox(seed))


def spawn_seeds(seed: int, count: int) -> list[int]:
    """Derive ``count`` independent 64-bit seeds from one master seed."""
    children = np.random.SeedSequence(seed).spawn(count)
    return [int(c.generate_state(1, dtype=np.uint64)[0]) for c in children]

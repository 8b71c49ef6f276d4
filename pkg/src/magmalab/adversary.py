"""Lower-bound instance families, the bit-flip adversary bound, and reductions.

Instances are flattened 0-1 vectors (tuples of ints). A family carries its
positive and negative instances (materialized, or a sample when the family
is too large) plus exact membership predicates, so neighbor counts are
always computed by flipping every bit and testing membership.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Callable, Iterable

import numpy as np

from magmalab.algebra import MagmaTable

Instance = tuple[int, ...]


def _validate_bits(bits) -> np.ndarray:
    arr = np.asarray(bits)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError("bit matrix must be square")
    if not np.isin(arr, (0, 1)).all():
        raise ValueError("bit matrix entries must be 0 or 1")
    return arr.astype(np.uint8)


# --- semigroup family -------------------------------------------------------


def _semigroup_core(n: int, c: int) -> list[tuple[int, int]]:
    return [(1, 1), (1, c), (c, 1), (c, c)]


def gen_semigroup_family(n: int, c: int, side: str, a: int | None = None, b: int | None = None) -> MagmaTable:
    """Zero table with ones at ``(1,1), (1,c), (c,1), (c,c)``; side ``"B"`` adds ``(a,b)``.

    Side-A tables are associative; side-B tables violate associativity at
    ``(a, b, c)``: ``(a*b)*c = 1`` but ``a*(b*c) = 0``.
    """
    if n < 5:
        raise ValueError("semigroup family needs n >= 5")
    if not 2 <= c < n:
        raise ValueError(f"c must lie in [2, {n}), got {c}")
    t = np.zeros((n, n), dtype=np.int64)
    for pos in _semigroup_core(n, c):
        t[pos] = 1
    side = side.upper()
    if side == "B":
        if a is None or b is None:
            raise ValueError("side B needs a and b")
        for name, v in (("a", a), ("b", b)):
            if not 2 <= v < n or v == c:
                raise ValueError(f"{name}={v} must lie in [2, {n}) and differ from c={c}")
        t[a, b] = 1
    elif side != "A":
        raise ValueError(f"side must be 'A' or 'B', got {side!r}")
    return MagmaTable(t, codomain={0, 1})


def _is_semigroup_a(x: Instance, n: int) -> bool:
    ones = [i for i, v in enumerate(x) if v]
    if len(ones) != 4:
        return False
    cells = {divmod(i, n) for i in ones}
    return any(cells == set(_semigroup_core(n, c)) for c in range(2, n))


def _is_semigroup_b(x: Instance, n: int) -> bool:
    ones = [i for i, v in enumerate(x) if v]
    if len(ones) != 5:
        return False
    cells = {divmod(i, n) for i in ones}
    for c in range(2, n):
        core = set(_semigroup_core(n, c))
        if core <= cells:
            ((a, b),) = cells - core
            if a >= 2 and b >= 2 and a != c and b != c:
                return True
    return False


# --- one-column family ------------------------------------------------------


def has_one_column(bits) -> bool:
    return bool(np.asarray(bits).all(axis=0).any())


def _zeros_per_column(x: Instance, n: int) -> np.ndarray:
    arr = np.asarray(x).reshape(n, n)
    return (arr == 0).sum(axis=0)


def _is_one_column_a(x: Instance, n: int) -> bool:
    z = _zeros_per_column(x, n)
    return int((z == 0).sum()) == 1 and int((z == 1).sum()) == n - 1


def _is_one_column_b(x: Instance, n: int) -> bool:
    return bool((_zeros_per_column(x, n) == 1).all())


@dataclass(frozen=True)
class InstanceFamily:
    """One side of a lower-bound construction.

    ``contains`` is exact; ``enumerate`` yields every member (only feasible
    for small ``n``); ``sample`` draws one member.
    """

    name: str
    n: int
    side: str
    contains: Callable[[Instance], bool]
    enumerate: Callable[[], Iterable[Instance]]
    sample: Callable[[np.random.Generator], Instance]
    size: int


def _one_column_sample(n: int, side: str, rng: np.random.Generator) -> Instance:
    arr = np.ones((n, n), dtype=np.uint8)
    full = int(rng.integers(n)) if side == "A" else None
    for j in range(n):
        if j != full:
            arr[int(rng.integers(n)), j] = 0
    return tuple(int(v) for v in arr.ravel())


def _one_column_enumerate(n: int, side: str):
    fulls = range(n) if side == "A" else [None]
    for full in fulls:
        cols = [j for j in range(n) if j != full]
        for zeros in itertools.product(range(n), repeat=len(cols)):
            arr = np.ones((n, n), dtype=np.uint8)
            for j, i in zip(cols, zeros):
                arr[i, j] = 0
            yield tuple(int(v) for v in arr.ravel())


def gen_one_column_family(n: int, side: str) -> InstanceFamily:
    """Side A: one all-1 column, every other column has exactly one 0. Side B: every column has exactly one 0."""
    if n < 2:
        raise ValueError("one-column family needs n >= 2")
    side = side.upper()
    if side not in ("A", "B"):
        raise ValueError(f"side must be 'A' or 'B', got {side!r}")
    contains = (lambda x: _is_one_column_a(x, n)) if side == "A" else (lambda x: _is_one_column_b(x, n))
    size = n * n ** (n - 1) if side == "A" else n**n
    return InstanceFamily(
        name="one-column",
        n=n,
        side=side,
        contains=contains,
        enumerate=lambda: _one_column_enumerate(n, side),
        sample=lambda rng: _one_column_sample(n, side, rng),
        size=size,
    )


def _semigroup_enumerate(n: int, side: str):
    for c in range(2, n):
        others = [v for v in range(2, n) if v != c]
        pairs = [(None, None)] if side == "A" else itertools.product(others, others)
        for a, b in pairs:
            table = gen_semigroup_family(n, c, side, a, b)
            yield tuple(int(v) for v in table.entries.ravel())


def semigroup_family(n: int, side: str) -> InstanceFamily:
    side = side.upper()
    if side not in ("A", "B"):
        raise ValueError(f"side must be 'A' or 'B', got {side!r}")
    contains = (lambda x: _is_semigroup_a(x, n)) if side == "A" else (lambda x: _is_semigroup_b(x, n))
    size = (n - 2) if side == "A" else (n - 2) * (n - 3) ** 2

    def sample(rng):
        c = int(rng.integers(2, n))
        others = [v for v in range(2, n) if v != c]
        a = b = None
        if side == "B":
            a, b = (others[int(i)] for i in rng.integers(len(others), size=2))
        return tuple(int(v) for v in gen_semigroup_family(n, c, side, a, b).entries.ravel())

    return InstanceFamily("semigroup", n, side, contains, lambda: _semigroup_enumerate(n, side), sample, size)


# --- the bound --------------------------------------------------------------


@dataclass(frozen=True)
class AdversaryFamily:
    """Positive (f = 1) and negative (f = 0) instances with exact membership tests."""

    positives: tuple[Instance, ...]
    negatives: tuple[Instance, ...]
    is_positive: Callable[[Instance], bool]
    is_negative: Callable[[Instance], bool]
    exhaustive: bool = True

    @classmethod
    def from_sets(cls, positives: Iterable[Instance], negatives: Iterable[Instance]) -> AdversaryFamily:
        pos = frozenset(tuple(x) for x in positives)
        neg = frozenset(tuple(x) for x in negatives)
        if pos & neg:
            raise ValueError("positive and negative instances overlap")
        lengths = {len(x) for x in pos | neg}
        if len(lengths) > 1:
            raise ValueError("instances have different bit lengths")
        return cls(tuple(sorted(pos)), tuple(sorted(neg)), pos.__contains__, neg.__contains__)

    @classmethod
    def from_families(cls, pos: InstanceFamily, neg: InstanceFamily, sample: int | None = None, seed: int = 0):
        """Materialize both sides, or draw ``sample`` members of each when given."""
        if sample is None:
            return cls(tuple(pos.enumerate()), tuple(neg.enumerate()), pos.contains, neg.contains, True)
        rng = np.random.Generator(np.random.Philox(seed))
        return cls(
            tuple(pos.sample(rng) for _ in range(sample)),
            tuple(neg.sample(rng) for _ in range(sample)),
            pos.contains,
            neg.contains,
            False,
        )


@dataclass(frozen=True)
class AdversaryBound:
    m: int
    m_prime: int
    exhaustive: bool = True

    @property
    def bound(self) -> float:
        return math.sqrt(self.m * self.m_prime)


def flip_neighbors(x: Instance, accept: Callable[[Instance], bool]) -> int:
    """Number of single-bit flips of ``x`` that land in ``accept``."""
    bits = list(x)
    count = 0
    for i in range(len(bits)):
        bits[i] ^= 1
        if accept(tuple(bits)):
            count += 1
        bits[i] ^= 1
    return count


def compute_adversary_bound(family: AdversaryFamily) -> AdversaryBound:
    """Minimum flip-neighbor counts ``m`` (positives into negatives) and ``m'`` (back)."""
    if not family.positives or not family.negatives:
        raise ValueError("both sides of the family must be non-empty")
    m = min(flip_neighbors(x, family.is_negative) for x in family.positives)
    m_prime = min(flip_neighbors(y, family.is_positive) for y in family.negatives)
    return AdversaryBound(m, m_prime, family.exhaustive)


def semigroup_adversary(n: int) -> AdversaryFamily:
    return AdversaryFamily.from_families(semigroup_family(n, "A"), semigroup_family(n, "B"))


def one_column_adversary(n: int, sample: int | None = None, seed: int = 0) -> AdversaryFamily:
    return AdversaryFamily.from_families(gen_one_column_family(n, "A"), gen_one_column_family(n, "B"), sample, seed)


# --- reductions -------------------------------------------------------------


def reduce_identity(bits) -> MagmaTable:
    """Table on ``{0..n}`` with ``t[i,j] = i`` where ``m[i,j] = 1`` (1-based), else 0.

    Row 0 and column 0 are zero. Column ``j`` of the matrix is all 1 exactly
    when ``j`` is a right identity of the table.
    """
    m = _validate_bits(bits)
    n = m.shape[0]
    t = np.zeros((n + 1, n + 1), dtype=np.int64)
    t[1:, 1:] = m * np.arange(1, n + 1)[:, None]
    return MagmaTable(t)


def reduce_loop(bits) -> MagmaTable:
    """Table on ``{0..n-1}`` that is the cyclic loop exactly when ``bits`` is the identity matrix.

    The anti-diagonal ``t[i, n-1-i]`` is ``n-1`` if ``m[i,i] = 1`` else 0.
    Elsewhere ``t[i,j] = (i+j) mod n`` when ``m[i, n-1-j] = 0``; otherwise 0,
    or 1 if ``(i+j) mod n = 0``.
    """
    m = _validate_bits(bits)
    n = m.shape[0]
    i = np.arange(n)[:, None]
    j = np.arange(n)[None, :]
    s = (i + j) % n
    flipped = m[i, n - 1 - j] == 1
    t = np.where(flipped, np.where(s != 0, 0, 1), s)
    anti = np.arange(n)
    t[anti, n - 1 - anti] = np.where(m[anti, anti] == 1, n - 1, 0)
    return MagmaTable(t)

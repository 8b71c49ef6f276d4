"""Finite multiplication tables and brute-force property deciders.

Every decider here reads the whole table directly. These are the ground-truth
oracles the query-counting algorithms elsewhere in the package are checked
against.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np


class Property(enum.Enum):
    ASSOCIATIVE = "associative"
    RIGHT_IDENTITY = "right-identity"
    MONOID = "monoid"
    GROUP = "group"
    QUASIGROUP = "quasigroup"
    LOOP = "loop"


class Side(enum.Enum):
    RIGHT = "right"
    LEFT = "left"
    TWO_SIDED = "two-sided"


class InverseMode(enum.Enum):
    RIGHT_ROW = "right-row"
    TWO_SIDED = "two-sided"


class IdentityError(ValueError):
    """A declared identity element fails the identity law."""


class MagmaTable:
    """An immutable ``n x n`` multiplication table over ``{0, ..., n-1}``.

    ``codomain`` is the set M of values the operation may take. It defaults to
    the values that actually occur, but may be declared larger. ``identity``
    is only a declaration; use :func:`find_identity` or
    :meth:`check_identity` to verify it.
    """

    __slots__ = ("_entries", "_codomain", "_identity", "_rows")

    def __init__(
        self,
        entries: Sequence[Sequence[int]] | np.ndarray,
        codomain: Iterable[int] | None = None,
        identity: int | None = None,
    ):
        arr = np.array(entries, dtype=np.int64)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
            raise ValueError(f"entries must be a non-empty square array, got shape {arr.shape}")
        n = arr.shape[0]
        if arr.min() < 0 or arr.max() >= n:
            bad = np.argwhere((arr < 0) | (arr >= n))[0]
            raise ValueError(f"entry {tuple(int(x) for x in bad)} = {arr[tuple(bad)]} outside [0, {n})")
        occurring = frozenset(int(v) for v in np.unique(arr))
        if codomain is None:
            cod = occurring
        else:
            cod = frozenset(int(v) for v in codomain)
            if any(v < 0 or v >= n for v in cod):
                raise ValueError(f"codomain {sorted(cod)} not contained in [0, {n})")
            missing = occurring - cod
            if missing:
                raise ValueError(f"values {sorted(missing)} occur in the table but not in codomain")
        if identity is not None and not 0 <= identity < n:
            raise ValueError(f"identity {identity} outside [0, {n})")
        arr.setflags(write=False)
        self._entries = arr
        self._codomain = cod
        self._identity = identity
        self._rows = tuple(tuple(int(v) for v in row) for row in arr)

    @property
    def n(self) -> int:
        return self._entries.shape[0]

    @property
    def entries(self) -> np.ndarray:
        return self._entries

    @property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        """Entries as nested tuples of Python ints (fast scalar access)."""
        return self._rows

    @property
    def codomain(self) -> frozenset[int]:
        return self._codomain

    @property
    def k(self) -> int:
        return len(self._codomain)

    @property
    def identity(self) -> int | None:
        return self._identity

    def __call__(self, a: int, b: int) -> int:
        return self._rows[a][b]

    def with_identity(self, identity: int | None) -> MagmaTable:
        return MagmaTable(self._entries, self._codomain, identity)

    def check_identity(self, e: int) -> None:
        """Raise :class:`IdentityError` unless ``e`` is a two-sided identity."""
        if not 0 <= e < self.n:
            raise IdentityError(f"identity {e} outside [0, {self.n})")
        rows = self._rows
        for x in range(self.n):
            if rows[e][x] != x or rows[x][e] != x:
                raise IdentityError(f"{e} is not an identity: {e}*{x}={rows[e][x]}, {x}*{e}={rows[x][e]}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MagmaTable):
            return NotImplemented
        return (
            np.array_equal(self._entries, other._entries)
            and self._codomain == other._codomain
            and self._identity == other._identity
        )

    def __hash__(self) -> int:
        return hash((self._rows, self._codomain, self._identity))

    def __repr__(self) -> str:
        return f"MagmaTable(n={self.n}, k={self.k}, identity={self._identity})"


@dataclass(frozen=True)
class PropertyReport:
    property: Property
    holds: bool
    witness: tuple | None = None
    note: str = ""

    def __bool__(self) -> bool:
        return self.holds


@dataclass(frozen=True)
class OrderResult:
    """Power sequence ``a, a^2, ..., a^t`` with ``a^t = a^s``, ``1 <= s < t``.

    Powers are indexed from 1, so ``powers[i]`` is ``a^(i+1)``.
    ``identity_power`` is the smallest ``i`` with ``a^i = e`` among
    ``a^1 .. a^(t-1)``, or ``None`` if ``e`` does not occur (or is unknown).
    """

    s: int
    t: int
    powers: tuple[int, ...]
    identity_power: int | None = None

    @property
    def reaches_identity(self) -> bool:
        return self.identity_power is not None


def _products(table: MagmaTable) -> tuple[np.ndarray, np.ndarray]:
    t = table.entries
    n = table.n
    left = t[t]  # left[a, b, c] = (a*b)*c
    right = t[np.arange(n)[:, None, None], t[None, :, :]]  # right[a, b, c] = a*(b*c)
    return left, right


def associativity_witnesses(table: MagmaTable) -> np.ndarray:
    """All triples ``(a, b, c)`` with ``(a*b)*c != a*(b*c)``, lexicographically sorted."""
    left, right = _products(table)
    return np.argwhere(left != right)


def is_associative(table: MagmaTable) -> PropertyReport:
    left, right = _products(table)
    bad = np.argwhere(left != right)
    if len(bad) == 0:
        return PropertyReport(Property.ASSOCIATIVE, True)
    a, b, c = (int(x) for x in bad[0])
    note = f"({a}*{b})*{c}={int(left[a, b, c])} but {a}*({b}*{c})={int(right[a, b, c])}"
    return PropertyReport(Property.ASSOCIATIVE, False, (a, b, c), note)


def find_identity(table: MagmaTable, side: Side = Side.TWO_SIDED) -> int | None:
    """Smallest element satisfying the sided identity law, or ``None``.

    A right identity ``e`` satisfies ``x*e = x`` for all ``x``.
    """
    t = table.entries
    idx = np.arange(table.n)
    right_ok = (t == idx[:, None]).all(axis=0)  # column e equals the index column
    left_ok = (t == idx[None, :]).all(axis=1)  # row e equals the index row
    if side is Side.RIGHT:
        ok = right_ok
    elif side is Side.LEFT:
        ok = left_ok
    else:
        ok = right_ok & left_ok
    hits = np.flatnonzero(ok)
    return int(hits[0]) if len(hits) else None


def is_quasigroup(table: MagmaTable) -> PropertyReport:
    """Latin-square check; witness is ``("row", i)`` or ``("column", j)``."""
    n = table.n
    t = table.entries
    for i in range(n):
        if len(np.unique(t[i])) != n:
            return PropertyReport(Property.QUASIGROUP, False, ("row", i), f"row {i} repeats a value")
    for j in range(n):
        if len(np.unique(t[:, j])) != n:
            return PropertyReport(Property.QUASIGROUP, False, ("column", j), f"column {j} repeats a value")
    return PropertyReport(Property.QUASIGROUP, True)


def is_loop(table: MagmaTable) -> PropertyReport:
    q = is_quasigroup(table)
    if not q.holds:
        return PropertyReport(Property.LOOP, False, q.witness, q.note)
    e = find_identity(table, Side.TWO_SIDED)
    if e is None:
        return PropertyReport(Property.LOOP, False, None, "quasigroup without a two-sided identity")
    return PropertyReport(Property.LOOP, True, (e,))


def is_monoid(table: MagmaTable) -> PropertyReport:
    assoc = is_associative(table)
    if not assoc.holds:
        return PropertyReport(Property.MONOID, False, assoc.witness, assoc.note)
    e = find_identity(table, Side.TWO_SIDED)
    if e is None:
        return PropertyReport(Property.MONOID, False, None, "no two-sided identity")
    return PropertyReport(Property.MONOID, True, (e,))


def is_group(table: MagmaTable) -> PropertyReport:
    mon = is_monoid(table)
    if not mon.holds:
        return PropertyReport(Property.GROUP, False, mon.witness, mon.note)
    (e,) = mon.witness
    for a in range(table.n):
        if not has_inverse(table, a, e, InverseMode.TWO_SIDED):
            return PropertyReport(Property.GROUP, False, (a,), f"{a} has no inverse")
    return PropertyReport(Property.GROUP, True, (e,))


def element_order(table: MagmaTable, a: int, e: int | None = None) -> OrderResult:
    """Iterate ``a^(i+1) = a^i * a`` until the first repetition.

    ``e`` defaults to the table's declared identity; it only affects
    ``identity_power``.
    """
    if e is None:
        e = table.identity
    rows = table.rows
    powers = [a]
    position = {a: 1}
    cur = a
    while True:
        cur = rows[cur][a]
        if cur in position:
            t = len(powers) + 1
            powers.append(cur)
            hit = position.get(e) if e is not None else None
            return OrderResult(position[cur], t, tuple(powers), hit)
        powers.append(cur)
        position[cur] = len(powers)


def has_inverse(table: MagmaTable, a: int, e: int, mode: InverseMode = InverseMode.TWO_SIDED) -> bool:
    table.check_identity(e)
    t = table.entries
    if mode is InverseMode.RIGHT_ROW:
        return bool((t[a] == e).any())
    return bool(((t[a] == e) & (t[:, a] == e)).any())

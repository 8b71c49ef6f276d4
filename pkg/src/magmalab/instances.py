"""Instance generators used by tests, benchmarks and the ``gen`` subcommand."""

from __future__ import annotations

import itertools

import numpy as np

from magmalab.algebra import MagmaTable


def cyclic_group(n: int) -> MagmaTable:
    """Z_n under addition, identity 0."""
    idx = np.arange(n)
    return MagmaTable((idx[:, None] + idx[None, :]) % n, identity=0)


def monoid_with_absorber(n: int) -> MagmaTable:
    """Z_(n-1) with an adjoined absorbing element ``n-1``; identity 0."""
    if n < 2:
        raise ValueError("monoid_with_absorber needs n >= 2")
    m = n - 1
    t = np.full((n, n), m, dtype=np.int64)
    idx = np.arange(m)
    t[:m, :m] = (idx[:, None] + idx[None, :]) % m
    return MagmaTable(t, identity=0)


def nilpotent_monoid(n: int) -> MagmaTable:
    """``{e, x, x^2, ..., x^(n-1)}`` with ``x^(n-1)`` absorbing.

    Element ``i`` stands for ``x^i`` (element 0 is the identity), and
    ``x^i * x^j = x^min(i+j, n-1)``. Every non-identity element is
    non-invertible, and ``x`` has the longest possible pre-period.
    """
    if n < 2:
        raise ValueError("nilpotent_monoid needs n >= 2")
    idx = np.arange(n)
    return MagmaTable(np.minimum(idx[:, None] + idx[None, :], n - 1), identity=0)


def single_witness_table(n: int, a: int = 2) -> MagmaTable:
    """Zero table with one planted 1 at ``(a, 1)``; codomain ``{0, 1}``.

    The only triple violating associativity is ``(a, a, 1)``:
    ``(a*a)*1 = 0*1 = 0`` while ``a*(a*1) = a*1 = 1``.
    """
    if n < 3 or not 2 <= a < n:
        raise ValueError("single_witness_table needs n >= 3 and 2 <= a < n")
    t = np.zeros((n, n), dtype=np.int64)
    t[a, 1] = 1
    return MagmaTable(t, codomain={0, 1})


def random_bit_matrix(n: int, rng: np.random.Generator, p: float = 0.5) -> np.ndarray:
    return (rng.random((n, n)) < p).astype(np.uint8)


def transformation_monoid(generators, degree: int, max_size: int | None = None) -> MagmaTable | None:
    """Monoid of maps on ``{0..degree-1}`` generated by ``generators``.

    Maps compose left to right: ``(f*g)(x) = g(f(x))``. Element 0 is the
    identity map. Returns ``None`` if the closure exceeds ``max_size``.
    """
    ident = tuple(range(degree))
    elements = [ident]
    index = {ident: 0}
    gens = [tuple(g) for g in generators]
    frontier = [ident]
    while frontier:
        nxt = []
        for f in frontier:
            for g in gens:
                h = tuple(g[f[x]] for x in range(degree))
                if h not in index:
                    index[h] = len(elements)
                    elements.append(h)
                    nxt.append(h)
                    if max_size is not None and len(elements) > max_size:
                        return None
        frontier = nxt
    n = len(elements)
    t = np.empty((n, n), dtype=np.int64)
    for i, f in enumerate(elements):
        for j, g in enumerate(elements):
            t[i, j] = index[tuple(g[f[x]] for x in range(degree))]
    return MagmaTable(t, identity=0)


def random_monoid(rng: np.random.Generator, max_size: int = 8, degree: int = 4) -> MagmaTable:
    """A random transformation monoid with at most ``max_size`` elements."""
    while True:
        ngens = int(rng.integers(1, 3))
        gens = [rng.integers(0, degree, size=degree) for _ in range(ngens)]
        mon = transformation_monoid(gens, degree, max_size)
        if mon is not None:
            perm = rng.permutation(mon.n)
            return relabel(mon, perm)


def relabel(table: MagmaTable, perm) -> MagmaTable:
    """Rename element ``x`` to ``perm[x]``."""
    perm = np.asarray(perm)
    inv = np.argsort(perm)
    t = perm[table.entries[inv[:, None], inv[None, :]]]
    e = None if table.identity is None else int(perm[table.identity])
    return MagmaTable(t, codomain={int(perm[v]) for v in table.codomain}, identity=e)


def all_tables(n: int):
    """Every binary operation on ``{0..n-1}`` (n^(n^2) of them)."""
    for values in itertools.product(range(n), repeat=n * n):
        yield MagmaTable(np.array(values).reshape(n, n))


def all_bit_matrices(n: int) -> np.ndarray:
    """All ``2^(n^2)`` 0-1 matrices of order ``n``, shape ``(2^(n^2), n, n)``."""
    count = n * n
    codes = np.arange(2**count, dtype=np.int64)
    bits = (codes[:, None] >> np.arange(count - 1, -1, -1)) & 1
    return bits.reshape(-1, n, n).astype(np.uint8)


KINDS = {
    "cyclic": cyclic_group,
    "monoid-absorber": monoid_with_absorber,
    "nilpotent": nilpotent_monoid,
    "single-witness": single_witness_table,
}

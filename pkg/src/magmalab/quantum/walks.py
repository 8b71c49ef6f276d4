"""Symmetric Markov chains on Johnson graphs and their quantized walks."""

from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np
from scipy.sparse.csgraph import connected_components

EIGEN_TOL = 1e-9
DEFAULT_CAP = 10**6


def default_cap() -> int:
    """Enumeration / state-space cap; ``MAGMA_LAB_CAP`` overrides the default."""
    value = os.environ.get("MAGMA_LAB_CAP")
    return int(value) if value else DEFAULT_CAP


class CombinatorialBlowup(RuntimeError):
    pass


class NotErgodic(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class MarkovChain:
    """Symmetric stochastic matrix ``P`` over the enumerated ``states``.

    Construction checks stochasticity, symmetry, irreducibility and, unless
    ``check_aperiodic=False``, aperiodicity (no eigenvalue at -1).
    """

    states: tuple
    P: np.ndarray
    check_aperiodic: bool = True

    def __post_init__(self):
        P = np.asarray(self.P, dtype=np.float64)
        if P.ndim != 2 or P.shape[0] != P.shape[1] or P.shape[0] != len(self.states):
            raise ValueError("P must be square with one row per state")
        if (P < 0).any():
            raise ValueError("negative transition probability")
        if np.abs(P.sum(axis=1) - 1).max() > 1e-12:
            raise ValueError("rows must sum to 1")
        if np.abs(P - P.T).max() > 1e-12:
            raise ValueError("transition matrix must be symmetric")
        ncomp, _ = connected_components(P > 0, directed=False)
        if ncomp != 1:
            raise NotErgodic(f"chain is reducible ({ncomp} components)")
        P.setflags(write=False)
        object.__setattr__(self, "P", P)
        if self.check_aperiodic and len(self.states) > 1:
            if self.eigenvalues()[0] < -1 + EIGEN_TOL:
                raise NotErgodic("chain is periodic (eigenvalue -1)")

    @property
    def size(self) -> int:
        return len(self.states)

    def eigenvalues(self) -> np.ndarray:
        """Eigenvalues in ascending order."""
        cached = self.__dict__.get("_eigs")
        if cached is None:
            cached = np.linalg.eigvalsh(self.P)
            object.__setattr__(self, "_eigs", cached)
        return cached

    def degree(self) -> np.ndarray:
        return (self.P > 0).sum(axis=1)


@dataclass(frozen=True)
class JohnsonGraph:
    """Vertices are the ``r``-subsets of ``{0..m-1}``; edges join subsets sharing ``r-1`` elements."""

    m: int
    r: int

    def __post_init__(self):
        if not 1 <= self.r <= self.m - 1:
            raise ValueError(f"need 1 <= r <= m-1, got m={self.m}, r={self.r}")

    @property
    def vertices(self) -> tuple[tuple[int, ...], ...]:
        return tuple(itertools.combinations(range(self.m), self.r))

    @property
    def degree(self) -> int:
        return self.r * (self.m - self.r)

    def adjacency(self) -> np.ndarray:
        verts = self.vertices
        masks = np.array([sum(1 << x for x in v) for v in verts], dtype=np.int64)
        common = np.vectorize(int.bit_count, otypes=[np.int64])(masks[:, None] & masks[None, :])
        return (common == self.r - 1).astype(np.float64)


def johnson_transition_matrix(m: int, r: int) -> np.ndarray:
    g = JohnsonGraph(m, r)
    return g.adjacency() / g.degree


def build_johnson_chain(m: int, r: int) -> MarkovChain:
    """Simple random walk on J(m, r)."""
    g = JohnsonGraph(m, r)
    return MarkovChain(g.vertices, g.adjacency() / g.degree)


def build_product_chain(c1: MarkovChain, c2: MarkovChain) -> MarkovChain:
    """Categorical product: one step moves both coordinates."""
    states = tuple(itertools.product(c1.states, c2.states))
    return MarkovChain(states, np.kron(c1.P, c2.P))


def spectral_gap(chain: MarkovChain | np.ndarray) -> float:
    """``1 - lambda_2`` with ``lambda_2`` the second-largest eigenvalue."""
    if isinstance(chain, MarkovChain):
        eigs = chain.eigenvalues()
    else:
        P = np.asarray(chain, dtype=np.float64)
        if np.abs(P - P.T).max() > 1e-12:
            raise ValueError("spectral_gap needs a symmetric matrix")
        eigs = np.linalg.eigvalsh(P)
    if eigs.size < 2:
        raise ValueError("chain needs at least two states")
    if abs(eigs[-1] - 1) > EIGEN_TOL:
        raise ArithmeticError(f"top eigenvalue {eigs[-1]} is not 1")
    return float(1 - eigs[-2])


def product_gap_from_factors(c1: MarkovChain, c2: MarkovChain) -> float:
    """Gap of the categorical product from pairwise products of factor eigenvalues."""
    prods = np.sort(np.outer(c1.eigenvalues(), c2.eigenvalues()).ravel())
    return float(1 - prods[-2])


def johnson_gap(m: int, r: int) -> float:
    """Closed form ``m / (r (m - r))`` for the simple walk on J(m, r)."""
    return m / (r * (m - r))


@dataclass(frozen=True)
class WalkCosts:
    s: float
    u: float
    c: float
    delta: float
    eps: float

    def __post_init__(self):
        if min(self.s, self.u, self.c) < 0:
            raise ValueError("costs must be non-negative")
        if not 0 < self.delta <= 1:
            raise ValueError(f"delta must lie in (0, 1], got {self.delta}")
        if not 0 < self.eps <= 1:
            raise ValueError(f"eps must lie in (0, 1], got {self.eps}")


def mnrs_cost(costs: WalkCosts) -> float:
    """Walk-search cost ``s + (u / sqrt(delta) + c) / sqrt(eps)``."""
    return costs.s + (costs.u / math.sqrt(costs.delta) + costs.c) / math.sqrt(costs.eps)


def classical_walk_cost(costs: WalkCosts) -> float:
    """Random-walk analogue ``s + (u / delta + c) / eps``."""
    return costs.s + (costs.u / costs.delta + costs.c) / costs.eps


class QuantizedWalk:
    """Szegedy walk ``W = R_B R_A`` on ``C^X (x) C^X`` with a marked phase flip.

    ``R_A`` reflects about ``span{|x> (x) sum_y sqrt(P_xy) |y>}``, ``R_B``
    about the swapped vectors. One search step is ``W . O_M`` where ``O_M``
    negates every ``|x, y>`` with ``x`` marked. The stationary superposition
    ``|pi> = |X|^(-1/2) sum_x |phi_x>`` is a fixed point of ``W``.
    """

    def __init__(self, chain: MarkovChain, marked: Iterable = (), cap: int | None = None):
        N = chain.size
        cap = default_cap() if cap is None else cap
        if N * N > cap:
            raise CombinatorialBlowup(f"|X|^2 = {N * N} exceeds cap {cap}")
        self.chain = chain
        self.N = N
        self.sqrtP = np.sqrt(chain.P)
        index = {s: i for i, s in enumerate(chain.states)}
        marked = list(marked)
        self.marked = np.array(sorted(index[s] if s in index else int(s) for s in marked), dtype=np.int64)
        if self.marked.size and (self.marked[0] < 0 or self.marked[-1] >= N):
            raise ValueError("marked state out of range")
        self.initial = (self.sqrtP / math.sqrt(N)).astype(np.complex128)

    def _reflect_a(self, psi: np.ndarray) -> np.ndarray:
        # psi[x, y]; |phi_x> has coefficients sqrtP[x, y]
        coeff = (self.sqrtP * psi).sum(axis=1)
        return 2 * self.sqrtP * coeff[:, None] - psi

    def _reflect_b(self, psi: np.ndarray) -> np.ndarray:
        coeff = (self.sqrtP.T * psi).sum(axis=0)
        return 2 * self.sqrtP.T * coeff[None, :] - psi

    def step(self, psi: np.ndarray, with_oracle: bool = True) -> np.ndarray:
        if with_oracle and self.marked.size:
            psi = psi.copy()
            psi[self.marked, :] *= -1
        return self._reflect_b(self._reflect_a(psi))

    def evolve(self, steps: int, with_oracle: bool = True) -> list[np.ndarray]:
        states = [self.initial]
        psi = self.initial
        for _ in range(steps):
            psi = self.step(psi, with_oracle)
            states.append(psi)
        return states


def detection_curve(chain: MarkovChain, marked: Iterable, steps: int, cap: int | None = None) -> np.ndarray:
    """Detection probability after 0, 1, ..., ``steps`` walk steps.

    The marked walk is compared with the unmarked one by a controlled
    (Hadamard-test) overlap: ``p_t = (1 - Re<psi_0(t)|psi_M(t)>) / 2``. It is
    0 when the two evolutions agree and 1 when they are antiparallel.
    """
    walk = QuantizedWalk(chain, marked, cap)
    marked_states = walk.evolve(steps, with_oracle=True)
    plain_states = walk.evolve(steps, with_oracle=False)
    out = np.empty(steps + 1)
    for t, (a, b) in enumerate(zip(plain_states, marked_states)):
        out[t] = (1 - np.vdot(a, b).real) / 2
    return out


def szegedy_detect(chain: MarkovChain, marked: Iterable, steps: int, cap: int | None = None) -> float:
    """Detection probability after ``steps`` steps of the marked quantized walk."""
    return float(detection_curve(chain, marked, steps, cap)[-1])


# Calibrated once on J(6, 2) with a single marked vertex: the smallest C for
# which detection reaches 1/2 within ceil(C / sqrt(delta * eps)) steps at
# every marked vertex, rounded up to one decimal.
DETECTION_CONSTANT = 0.7


def detection_steps(delta: float, eps: float, constant: float = DETECTION_CONSTANT) -> int:
    return math.ceil(constant / math.sqrt(delta * eps))


def first_detection_step(chain: MarkovChain, marked: Sequence, max_steps: int, threshold: float = 0.5) -> int | None:
    curve = detection_curve(chain, marked, max_steps)
    hits = np.flatnonzero(curve >= threshold)
    return int(hits[0]) if hits.size else None

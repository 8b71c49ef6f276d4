"""Exact state-vector Grover search, BBHT and amplitude amplification."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable

import numpy as np

from magmalab.oracle import make_rng

NORM_TOL = 1e-9


class StateVector:
    """Normalized complex amplitudes over ``dim`` basis states."""

    def __init__(self, amplitudes):
        amp = np.array(amplitudes, dtype=np.complex128)
        if amp.ndim != 1 or amp.size == 0:
            raise ValueError("amplitudes must be a non-empty vector")
        norm = float(np.vdot(amp, amp).real)
        if abs(norm - 1.0) > NORM_TOL:
            raise ValueError(f"state not normalized: |psi|^2 = {norm}")
        self.amplitudes = amp

    @classmethod
    def uniform(cls, dim: int) -> StateVector:
        return cls(np.full(dim, 1 / math.sqrt(dim), dtype=np.complex128))

    @property
    def dim(self) -> int:
        return self.amplitudes.size

    def norm2(self) -> float:
        return float(np.vdot(self.amplitudes, self.amplitudes).real)

    def probabilities(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2

    def probability(self, indices) -> float:
        idx = np.fromiter(indices, dtype=np.int64)
        return float(self.probabilities()[idx].sum()) if idx.size else 0.0


def _marked_array(N: int, marked: Iterable[int]) -> np.ndarray:
    idx = np.array(sorted(set(marked)), dtype=np.int64)
    if idx.size and (idx[0] < 0 or idx[-1] >= N):
        raise ValueError(f"marked indices must lie in [0, {N})")
    return idx


def grover_iterate(amp: np.ndarray, marked: np.ndarray) -> np.ndarray:
    """One oracle call (phase flip on ``marked``) followed by inversion about the mean."""
    amp = amp.copy()
    amp[marked] *= -1
    return 2 * amp.mean() - amp


def grover_state(N: int, marked: Iterable[int], iterations: int) -> StateVector:
    if N < 1:
        raise ValueError("N must be >= 1")
    if iterations < 0:
        raise ValueError("iterations must be >= 0")
    m = _marked_array(N, marked)
    amp = StateVector.uniform(N).amplitudes
    for _ in range(iterations):
        amp = grover_iterate(amp, m)
    return StateVector(amp)


def grover_run(N: int, marked: Iterable[int], iterations: int) -> tuple[float, int]:
    """Success probability after ``iterations`` Grover steps, and oracle calls used."""
    marked = list(marked)
    state = grover_state(N, marked, iterations)
    return state.probability(set(marked)), iterations


def grover_closed_form(N: int, k: int, iterations: int) -> float:
    theta = math.asin(math.sqrt(k / N))
    return math.sin((2 * iterations + 1) * theta) ** 2


@dataclass(frozen=True)
class SearchResult:
    found: int | None
    oracle_calls: int
    rounds: int


# With k > 0 the expected cost of the exponential schedule is at most
# (9/2) sqrt(N/k); by Markov's inequality stopping at twice that succeeds
# with probability >= 1/2.
BBHT_CUTOFF = 9.0
BBHT_GROWTH = 6 / 5


def bbht_search(predicate: Callable[[int], bool], N: int, seed: int) -> SearchResult:
    """Grover search with an unknown number of solutions.

    Round ``i`` draws ``j`` uniformly from ``[0, m)``, runs ``j`` Grover
    iterations, measures, and checks the outcome with one more oracle call;
    ``m`` grows by 6/5 per round up to ``sqrt(N)``. The search gives up once
    ``BBHT_CUTOFF * sqrt(N)`` oracle calls have been spent.

    ``predicate`` is tabulated once to drive the simulation; only the
    simulated calls are charged.
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    rng = make_rng(seed)
    marked = np.array([x for x in range(N) if predicate(x)], dtype=np.int64)
    is_marked = np.zeros(N, dtype=bool)
    is_marked[marked] = True
    cutoff = BBHT_CUTOFF * math.sqrt(N)
    states = [StateVector.uniform(N).amplitudes]
    m = 1.0
    calls = 0
    rounds = 0
    while calls < cutoff:
        j = int(rng.integers(0, max(1, math.floor(m))))
        while len(states) <= j:
            states.append(grover_iterate(states[-1], marked))
        p = np.abs(states[j]) ** 2
        x = int(rng.choice(N, p=p / p.sum()))
        calls += j + 1
        rounds += 1
        if is_marked[x]:
            return SearchResult(x, calls, rounds)
        m = min(BBHT_GROWTH * m, math.sqrt(N))
    return SearchResult(None, calls, rounds)


def amplitude_amplify(eps0: float, rounds: int) -> float:
    """Success probability after ``rounds`` amplification rounds from base probability ``eps0``."""
    if not 0 < eps0 <= 1:
        raise ValueError("eps0 must lie in (0, 1]")
    if rounds < 0:
        raise ValueError("rounds must be >= 0")
    theta = math.asin(math.sqrt(eps0))
    return math.sin((2 * rounds + 1) * theta) ** 2


def amplification_rounds(eps0: float) -> int:
    """``ceil((pi/4) / sqrt(eps0))`` rounds, enough for success >= 2/3 at small ``eps0``."""
    return math.ceil((math.pi / 4) / math.sqrt(eps0))

"""Query-cost expressions and their exponent optimizations."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from scipy.optimize import minimize_scalar

GROVER_EXPONENT = 1.5


class Regime(enum.Enum):
    SMALL = "small"
    MID = "mid"
    GROVER = "grover"


@dataclass(frozen=True)
class ExponentResult:
    alpha: float
    beta_star: float | None
    exponent: float
    regime: Regime


def semigroup_walk_exponent(alpha: float, beta: float) -> float:
    """Exponent of ``n^(2b) + n^(1+b/2) + n^(3/2+a-b/2)`` for ``r = n^b``, ``k = n^a``."""
    return max(2 * beta, 1 + beta / 2, 1.5 + alpha - beta / 2)


def semigroup_exponent(alpha: float) -> ExponentResult:
    """Piecewise optimum of the walk exponent; Grover's 3/2 once the walk stops paying."""
    if not 0 <= alpha <= 1:
        raise ValueError(f"alpha must lie in [0, 1], got {alpha}")
    if alpha <= 1 / 6:
        return ExponentResult(alpha, 0.5 + alpha, 1.25 + alpha / 2, Regime.SMALL)
    if alpha <= 3 / 8:
        return ExponentResult(alpha, 0.6 + 0.4 * alpha, 1.2 + 0.8 * alpha, Regime.MID)
    return ExponentResult(alpha, None, GROVER_EXPONENT, Regime.GROVER)


def semigroup_exponent_numeric(alpha: float, xatol: float = 1e-12) -> tuple[float, float]:
    """``(beta, exponent)`` by bounded scalar minimization over admissible ``beta in (alpha, 1)``.

    The exponent is capped at 3/2.
    """
    res = minimize_scalar(
        lambda b: semigroup_walk_exponent(alpha, b),
        bounds=(alpha, 1.0),
        method="bounded",
        options={"xatol": xatol},
    )
    return float(res.x), min(float(res.fun), GROVER_EXPONENT)


def semigroup_cost(n: float, k: float, r: float) -> float:
    """``(r+k)^2 + (2n/r) (sqrt(r) (r+k) + k sqrt(n r))``."""
    if not r > 2 * k:
        raise ValueError(f"need r > 2k, got r={r}, k={k}")
    return (r + k) ** 2 + (2 * n / r) * (math.sqrt(r) * (r + k) + k * math.sqrt(n * r))


def semigroup_cost_optimum(n: int, k: int) -> tuple[int, float]:
    """Best integer ``r`` in ``(2k, n]`` by exhaustive search."""
    best = None
    for r in range(2 * k + 1, n + 1):
        c = semigroup_cost(n, k, r)
        if best is None or c < best[1]:
            best = (r, c)
    if best is None:
        raise ValueError(f"no admissible r for n={n}, k={k}")
    return best


def group_randomized_cost(n: float, r: float) -> float:
    """``n r + n^2 / r``: phase-1 powers plus phase-2 row scans."""
    if not 1 <= r <= n:
        raise ValueError(f"need 1 <= r <= n, got r={r}, n={n}")
    return n * r + n * n / r


def group_randomized_optimum(n: float) -> tuple[float, float]:
    """``(sqrt(n), 2 n^(3/2))``."""
    r = math.sqrt(n)
    return r, group_randomized_cost(n, r)


def group_randomized_integer_optimum(n: int) -> int:
    """Integer minimizer of ``n r + n^2 / r`` (one of the two integers around ``sqrt(n)``)."""
    lo = max(1, math.isqrt(n))
    candidates = [r for r in (lo, lo + 1) if r <= n]
    return min(candidates, key=lambda r: group_randomized_cost(n, r))


def group_quantum_exponent_terms(beta: float) -> tuple[float, float]:
    """Exponents of ``sqrt(n) r^(2/3)`` (phase 1, log factor aside) and ``n / sqrt(r)`` (phase 2)."""
    return 0.5 + 2 * beta / 3, 1 - beta / 2


@dataclass(frozen=True)
class QuantumGroupExponent:
    beta_star: float
    exponent: float
    log_factor: bool = True


def group_quantum_exponent() -> QuantumGroupExponent:
    """Balance ``1/2 + 2b/3 = 1 - b/2``: ``b = 3/7``, exponent ``11/14``, times ``log n``."""
    return QuantumGroupExponent(3 / 7, 11 / 14)


def group_quantum_exponent_numeric(xatol: float = 1e-12) -> tuple[float, float]:
    res = minimize_scalar(
        lambda b: max(group_quantum_exponent_terms(b)),
        bounds=(0.0, 1.0),
        method="bounded",
        options={"xatol": xatol},
    )
    return float(res.x), float(res.fun)


@dataclass(frozen=True)
class BoundRow:
    problem: str
    lower: float | None
    upper: float
    upper_log: bool = False
    note: str = ""


def misc_bounds() -> list[BoundRow]:
    """Quantum query exponents: ``lower`` / ``upper`` mean ``n^lower`` / ``n^upper``."""
    return [
        BoundRow("semigroup", 1.0, 1.25, False, "upper 5/4 for constant |M|; 3/2 by Grover in general"),
        BoundRow("identity", 1.0, 1.0),
        BoundRow("quasigroup", 1.0, 7 / 6),
        BoundRow("loop", 1.0, 7 / 6),
        BoundRow("group", None, 11 / 14, True, "no lower bound known"),
    ]

"""Exact Grover rotations, the unknown-k search, and amplitude amplification."""

import math

import numpy as np

from magmalab.quantum.search import amplification_rounds, amplitude_amplify, bbht_search, grover_closed_form, grover_run

N = 256
for k in (1, 4, 16):
    best = round(math.pi / (4 * math.asin(math.sqrt(k / N))) - 0.5)
    p, calls = grover_run(N, range(k), best)
    print(f"N={N} k={k:<3} t*={best:<3} p={p:.6f}  formula={grover_closed_form(N, k, best):.6f}")

# overshooting rotates past the marked subspace
print("\nk=1, p(t):", " ".join(f"{grover_run(N, [0], t)[0]:.2f}" for t in range(0, 26, 2)))

# unknown k: exponentially growing random iteration counts
for k in (1, 8, 64):
    target = set(range(k))
    runs = [bbht_search(lambda x: x in target, N, seed) for seed in range(300)]
    ok = [r for r in runs if r.found is not None]
    print(f"BBHT k={k:<3} success {len(ok) / len(runs):.2f}  mean calls {np.mean([r.oracle_calls for r in ok]):6.1f}  sqrt(N/k)={math.sqrt(N / k):5.1f}")

print()
for eps0 in (0.01, 0.001, 1e-4):
    R = amplification_rounds(eps0)
    print(f"eps0={eps0:<7} rounds={R:<4} success={amplitude_amplify(eps0, R):.4f}  classical repeats ~ {1 / eps0:.0f}")

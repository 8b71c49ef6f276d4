"""Random walks on Johnson graphs: spectral gaps and what a quantized walk detects."""

import numpy as np

from magmalab.quantum.walks import (
    build_johnson_chain,
    build_product_chain,
    detection_curve,
    detection_steps,
    johnson_gap,
    product_gap_from_factors,
    spectral_gap,
)

print(" m  r  states      gap  m/(r(m-r))   1/r")
for m, r in ((6, 2), (8, 3), (10, 2), (12, 4), (12, 6)):
    c = build_johnson_chain(m, r)
    print(f"{m:2d} {r:2d} {c.size:7d} {spectral_gap(c):8.5f} {johnson_gap(m, r):11.5f} {1 / r:6.3f}")

# the walk on pairs (A, B) moves both coordinates at once
c = build_johnson_chain(6, 2)
prod = build_product_chain(c, c)
print(f"\nJ(6,2) x J(6,2): {prod.size} states, gap {spectral_gap(prod):.5f} (from factor spectra {product_gap_from_factors(c, c):.5f})")

# one marked vertex: compare the walk with and without the phase flip
T = detection_steps(spectral_gap(c), 1 / c.size)
curve = detection_curve(c, [c.states[0]], 3 * T)
print(f"\nmarked {c.states[0]} of {c.size}; schedule says {T} steps")
for t, p in enumerate(curve):
    print(f"  t={t:2d}  {'#' * int(40 * p):<40} {p:.3f}")
print("nothing marked:", np.abs(detection_curve(c, [], 10)).max())

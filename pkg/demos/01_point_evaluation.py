"""
Evaluating the Voigt function K and its companion L
===================================================

w(x + iy) = K + iL for 0 <= y <= 0.1.  A few spot evaluations, each
checked against the multiprecision reference.
"""

import numpy as np

from voigtw import eval_w, eval_w_batch
from voigtw.oracle import ref_w

points = [
    (0.0, 0.0),     # w(0) = 1
    (1.0, 0.05),    # interior of the Taylor domain
    (6.7, 1e-4),    # just outside the computing boundary
    (100.0, 1e-10), # deep in the continued-fraction domain
    (4000.0, 0.1),  # far wing
]

print(f"{'x':>8} {'y':>8} {'K':>24} {'L':>24} {'dK':>9} {'dL':>9}")
for x, y in points:
    k, l = eval_w(x, y)
    ref = ref_w(x, y)
    d_k = abs(k - ref.real) / abs(ref.real)
    d_l = abs(l - ref.imag) / abs(ref.imag) if ref.imag != 0 else 0.0
    print(f"{x:8.1f} {y:8.0e} {k:24.16e} {l:24.16e} {float(d_k):9.1e} {float(d_l):9.1e}")

# the y = 0 axis collapses to closed forms: K = exp(-x^2) exactly
xs = np.linspace(0, 5, 6)
k, l = eval_w_batch(xs, 0.0)
print("\nK(x, 0) - exp(-x^2):", np.max(np.abs(k - np.exp(-xs * xs))), "(bitwise zero)")

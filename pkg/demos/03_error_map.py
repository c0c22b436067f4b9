"""
Accuracy map against the multiprecision oracle
==============================================

Relative errors of both components over a coarse (x, y) grid spanning
both evaluation domains and y down to 1e-100.  The advertised envelope
is max dK <= 5e-13 (worst, near the dispatch boundary) with per-y means
around 1e-16.
"""

import numpy as np

from voigtw import eval_w_batch
from voigtw.oracle import ref_w

xs = np.concatenate([np.linspace(0.5, 4000.0, 12), np.logspace(-3, 1, 8)])
ys = np.logspace(-100, np.log10(0.1), 8)

print(f"{'y':>9} {'max dK':>9} {'mean dK':>9} {'max dL':>9} {'mean dL':>9}")
for y in ys:
    k_arr, l_arr = eval_w_batch(xs, float(y))
    d_res, d_ims = [], []
    for x, k, l in zip(xs, k_arr, l_arr):
        ref = ref_w(float(x), float(y))
        d_res.append(float(abs(k - ref.real) / abs(ref.real)))
        d_ims.append(float(abs(l - ref.imag) / abs(ref.imag)))
    print(
        f"{y:9.0e} {max(d_res):9.1e} {np.mean(d_res):9.1e}"
        f" {max(d_ims):9.1e} {np.mean(d_ims):9.1e}"
    )

print("\nfor a CSV version over a finer grid:")
print("  voigtw errmap --x-min 1e-3 --x-max 4000 --x-count 100 --x-scale log \\")
print("      --y-min 1e-100 --y-max 0.1 --y-count 20 --out errmap.csv")

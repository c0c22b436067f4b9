"""
The efficient computing boundary z_c(y)
=======================================

Inside |z| < z_c(y) the evaluator uses the Taylor-in-y core; outside it
switches to the Laplace continued fraction.  z_c grows as y shrinks,
because the fraction converges ever more slowly near the real axis.

The two branches are built from unrelated recurrences, so their
agreement in the straddle zone is a strong cross-check.
"""

import numpy as np

from voigtw import boundary_z_c, eval_w_internal, laplace_w, select_params
from voigtw.scheme import external_depth

print("boundary radius for double precision (eps = 1e-16):")
for y in (0.1, 1e-2, 1e-4, 1e-10, 1e-30, 1e-100):
    print(f"  y = {y:7.0e}   z_c = {boundary_z_c(y, 1e-16):7.4f}")

print("\nand for eps = 1e-100 (needs |z| > ~16.8 at tiny y):")
for y in (1e-3, 1e-20, 0.1):
    print(f"  y = {y:7.0e}   z_c = {boundary_z_c(y, 1e-100):7.4f}")

# branch agreement while straddling the boundary at y = 1e-4
y = 1e-4
z_c = boundary_z_c(y, 1e-16)
params = select_params(y, 1e-16)
print(f"\nbranch disagreement straddling z_c({y}) = {z_c:.4f}:")
for r in z_c + np.linspace(-1e-3, 1e-3, 5):
    x = float(np.sqrt(r * r - y * y))
    ki, li = eval_w_internal(x, y, params)
    we = laplace_w(complex(x, y), max(external_depth(r), params.n_c))
    print(
        f"  r = z_c{r - z_c:+8.0e}   dK = {abs(ki - we.real) / abs(we.real):7.1e}"
        f"   dL = {abs(li - we.imag) / abs(we.imag):7.1e}"
    )

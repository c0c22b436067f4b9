"""Laplace continued fraction for w(z) in the external domain.

    w(z) ~ (i/sqrt(pi)) / (z - (1/2)/(z - 1/(z - (3/2)/(z - ... - (N/2)/z))))

with partial numerators k/2 for k = 1..N, evaluated bottom-up in complex
arithmetic.  Convergence collapses for tiny Im(z) at moderate |z|; the
dispatcher keeps this branch outside the computing boundary, this module
itself never restricts its domain.
"""

import numpy as np

_I_SQRT_PI = 1j / np.sqrt(np.pi)


def laplace_w(z, n_c):
    """Depth-n_c truncated Laplace continued fraction for w(z).

    z may be a complex scalar or ndarray; z = 0 is rejected (the leading
    denominator vanishes).
    """
    if n_c < 1:
        raise ValueError(f"n_c must be a positive integer, got {n_c}")
    z = np.asarray(z, dtype=np.complex128)
    if np.any(z == 0):
        raise ValueError("laplace_w is undefined at z = 0")
    t = z.copy()
    for k in range(n_c, 0, -1):
        t = z - (0.5 * k) / t
    out = _I_SQRT_PI / t
    return out if out.ndim else complex(out)


def laplace_rel_error(z, n_c, ref):
    """Componentwise worst relative error of the depth-n_c fraction vs ref.

    max(|Re - Re_ref|/|Re_ref|, |Im - Im_ref|/|Im_ref|); undefined (raises)
    when either reference component is zero.
    """
    ref = complex(ref)
    if ref.real == 0.0 or ref.imag == 0.0:
        raise ValueError("reference components must both be nonzero")
    approx = laplace_w(z, n_c)
    return max(
        abs(approx.real - ref.real) / abs(ref.real),
        abs(approx.imag - ref.imag) / abs(ref.imag),
    )

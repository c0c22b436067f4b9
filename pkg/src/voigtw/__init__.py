"""Double-precision Voigt / complex error function w(z) = K + iL for
small imaginary argument y <= 0.1.

The evaluator splits the plane at the computing boundary z_c(y): inside,
a Taylor expansion of L in y whose coefficients fold exact integer tables
with powers of y; outside, the Laplace continued fraction.  A
multiprecision oracle (`voigtw.oracle`) backs all accuracy testing and
never participates in production evaluation.
"""

from .coeffs import CoeffTables, build_pq_tables, get_tables, hermite_coeffs, p_closed_form
from .dawson import dawson_cf
from .laplace import laplace_rel_error, laplace_w
from .scheme import (
    BOUNDARY_LEVELS,
    PARAM_LEVELS,
    boundary_z_c,
    eval_w,
    eval_w_batch,
    external_depth,
    select_params,
)
from .taylor import (
    SeriesParams,
    VoigtValue,
    YCoefficientSet,
    build_y_coefficients,
    eval_K,
    eval_L,
    eval_w_internal,
)

__version__ = "1.0.0"

__all__ = [
    "BOUNDARY_LEVELS",
    "PARAM_LEVELS",
    "CoeffTables",
    "SeriesParams",
    "VoigtValue",
    "YCoefficientSet",
    "boundary_z_c",
    "build_pq_tables",
    "build_y_coefficients",
    "dawson_cf",
    "eval_K",
    "eval_L",
    "eval_w",
    "eval_w_batch",
    "eval_w_internal",
    "external_depth",
    "get_tables",
    "hermite_coeffs",
    "laplace_rel_error",
    "laplace_w",
    "p_closed_form",
    "select_params",
]

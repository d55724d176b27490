"""Array kernels for the quadrature hot path, with backend selection.

The compiled extension is preferred when present; set STRINGRAD_BACKEND to
"python" or "cython" to force a choice (forcing "cython" raises if the
extension was not built).
"""
import os

import numpy as np

_choice = os.environ.get("STRINGRAD_BACKEND", "").strip().lower()
if _choice == "python":
    from . import _pyref as _impl
elif _choice == "cython":
    from . import _fast as _impl  # type: ignore[no-redef]
else:
    try:
        from . import _fast as _impl  # type: ignore[no-redef]
    except ImportError:
        from . import _pyref as _impl

BACKEND = _impl.BACKEND
fn_values = _impl.fn_values
legendre_table = _impl.legendre_table


def gegenbauer_c32_table(degree_max, t):
    """Table of C_k^(3/2)(t) for k = 0..degree_max over an array.

    Uses C_k^(3/2) = P'_{k+1} with the stable derivative recurrence
    P'_{l+1} = (l+1) P_l + t P'_l on top of the selected Legendre kernel.
    """
    t = np.asarray(t, dtype=np.float64)
    P = legendre_table(degree_max, t)
    C = np.empty_like(P)
    dp = np.zeros_like(t)  # P'_0
    for l in range(degree_max + 1):
        dp = (l + 1) * P[l] + t * dp  # P'_{l+1}
        C[l] = dp
    return C

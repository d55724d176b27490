"""Pure numpy reference implementation of the hot array kernels.

Used as the fallback when the Cython extension is not built, and as the
ground truth the compiled kernels are tested against.
"""
import numpy as np

BACKEND = "python"

ENDPOINT_WINDOW = 1e-6


def fn_values(N: int, t):
    """Evaluate f_N over an array of abscissas in [-1, 1].

    The numerator 1 - (-1)^N cos(N pi t) is evaluated through half-angle
    squares so it never cancels, and the removable singularity at t = +-1
    is handled by a short Taylor expansion in s = 1 - |t|.
    """
    t = np.asarray(t, dtype=np.float64)
    A = N * np.pi
    s = 1.0 - np.abs(t)
    out = np.empty_like(t)
    near = s < ENDPOINT_WINDOW
    far = ~near

    tf = t[far]
    half = 0.5 * A * tf
    if N % 2 == 0:
        num = 2.0 * np.sin(half) ** 2
    else:
        num = 2.0 * np.cos(half) ** 2
    out[far] = num / (1.0 - tf * tf)

    se = s[near]
    xe = 0.5 * A * se
    out[near] = (A * A * se / (2.0 * (2.0 - se))) * (
        1.0 - xe * xe / 3.0 + 2.0 * xe ** 4 / 45.0
    )
    return out


def legendre_table(degree_max: int, t):
    """Table of P_l(t) for l = 0..degree_max over an array of abscissas."""
    t = np.asarray(t, dtype=np.float64)
    P = np.empty((degree_max + 1,) + t.shape, dtype=np.float64)
    P[0] = 1.0
    if degree_max >= 1:
        P[1] = t
    for l in range(1, degree_max):
        P[l + 1] = ((2 * l + 1) * t * P[l] - l * P[l - 1]) / (l + 1)
    return P

"""Independent ground-truth evaluators: direct 2D sphere quadrature for
I(N, alpha), 1D projection quadrature for Legendre and Gegenbauer
coefficients, and a quadrature-based Cin.

This module deliberately depends only on the primitive evaluators
(f_eval-style kernels, Legendre/Gegenbauer tables); it never calls the
closed-form coefficient code it exists to validate.
"""
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import ConvergenceError, DomainError, ParityError
from .kernels import fn_values, gegenbauer_c32_table, legendre_table
from .special_functions import _check_harmonic

# Direct quadrature is only trusted while the integrand oscillation is
# resolvable; beyond this the closed forms cross-validate each other.
ORACLE_N_CAP = 8

SPHERE_BASE_NODES_PER_N = 32
MAX_DOUBLINGS = 10


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    error_estimate: float
    evaluations: int


@lru_cache(maxsize=64)
def _gauss_rule(n: int):
    x, w = np.polynomial.legendre.leggauss(n)
    return x, w


def _refine_1d(f, nodes0: int, abs_tol: float, rel_tol: float) -> QuadratureResult:
    """Whole-interval Gauss-Legendre on [-1, 1] with node doubling until two
    successive refinements agree."""
    prev = None
    evals = 0
    n = nodes0
    for _ in range(MAX_DOUBLINGS + 1):
        x, w = _gauss_rule(n)
        val = float(np.dot(w, f(x)))
        evals += n
        if prev is not None:
            delta = abs(val - prev)
            if delta <= max(abs_tol, rel_tol * abs(val)):
                return QuadratureResult(val, delta, evals)
        prev = val
        n *= 2
    raise ConvergenceError(f"1D quadrature stalled at {n // 2} nodes")


def sphere_integral_oracle(N: int, alpha: float) -> QuadratureResult:
    """I(N, alpha) by tensor-product Gauss-Legendre over the reduced form

        I = int_{-1}^{1} dt int_0^{2 pi} dphi
            f_N(t) f_N(t cos a + sqrt(1-t^2) sin a cos phi).

    Per-axis node count scales linearly with N; both axes are doubled until
    two successive refinements agree to 1e-8 relative.
    """
    n = _check_harmonic(N)
    if n > ORACLE_N_CAP:
        raise DomainError(
            f"sphere oracle capped at N <= {ORACLE_N_CAP} (oscillation limit)"
        )
    if not 0.0 < alpha < math.pi:
        raise DomainError(f"alpha must lie in (0, pi), got {alpha!r}")
    ca, sa = math.cos(alpha), math.sin(alpha)

    def evaluate(nodes: int) -> float:
        xt, wt = _gauss_rule(nodes)
        xp, wp = _gauss_rule(nodes)
        phi = math.pi * (xp + 1.0)
        wphi = math.pi * wp
        f1 = fn_values(n, xt)
        arg = xt[:, None] * ca + np.sqrt(1.0 - xt ** 2)[:, None] * sa * np.cos(phi)[None, :]
        np.clip(arg, -1.0, 1.0, out=arg)
        f2 = fn_values(n, arg)
        return float(np.dot(wt * f1, f2 @ wphi))

    base = SPHERE_BASE_NODES_PER_N * (n + 1)
    prev = None
    evals = 0
    nodes = base
    for _ in range(MAX_DOUBLINGS + 1):
        val = evaluate(nodes)
        evals += nodes * nodes
        if prev is not None:
            delta = abs(val - prev)
            if delta <= 1e-8 * abs(val):
                return QuadratureResult(val, delta, evals)
        prev = val
        nodes *= 2
    raise ConvergenceError(f"sphere quadrature stalled for N={n}, alpha={alpha}")


def sphere_integral_simpson(N: int, alpha: float, panels: int = 1024) -> float:
    """Second, independent discretization (uniform composite Simpson) used to
    self-validate the Gauss oracle. Not refined; fixed resolution."""
    n = _check_harmonic(N)
    ca, sa = math.cos(alpha), math.sin(alpha)
    m = 2 * panels
    t = np.linspace(-1.0, 1.0, m + 1)
    phi = np.linspace(0.0, 2.0 * math.pi, m + 1)
    wt = np.ones(m + 1)
    wt[1:-1:2] = 4.0
    wt[2:-1:2] = 2.0
    wt *= (t[1] - t[0]) / 3.0
    wp = np.ones(m + 1)
    wp[1:-1:2] = 4.0
    wp[2:-1:2] = 2.0
    wp *= (phi[1] - phi[0]) / 3.0
    f1 = fn_values(n, t)
    arg = t[:, None] * ca + np.sqrt(np.clip(1.0 - t ** 2, 0.0, None))[:, None] * sa * np.cos(phi)[None, :]
    np.clip(arg, -1.0, 1.0, out=arg)
    f2 = fn_values(n, arg)
    return float(np.dot(wt * f1, f2 @ wp))


def legendre_projection_oracle(N: int, l: int) -> QuadratureResult:
    """C_l = (2l+1)/2 int_{-1}^{1} f_N(t) P_l(t) dt by refined quadrature.

    Odd l is rejected: f_N is even so the projection vanishes by parity.
    """
    n = _check_harmonic(N)
    if l < 0:
        raise DomainError("degree must be non-negative")
    if l % 2:
        raise ParityError(f"odd-degree projection l={l} vanishes by parity")

    def integrand(t):
        return fn_values(n, t) * legendre_table(l, t)[l]

    base = max(64, 8 * n)
    res = _refine_1d(integrand, base, abs_tol=1e-11, rel_tol=1e-10)
    scale = (2 * l + 1) / 2.0
    return QuadratureResult(scale * res.value, scale * res.error_estimate, res.evaluations)


def gegenbauer_projection_oracle(N: int, m: int) -> QuadratureResult:
    """b_{2m} = (1/h_{2m}) int [1 - (-1)^N cos(N pi t)] C_{2m}^(3/2)(t) dt.

    The (1 - t^2) weight has already cancelled the denominator of f_N, so
    the integrand is singularity-free.
    """
    n = _check_harmonic(N)
    if m < 0:
        raise DomainError("m must be non-negative")
    A = n * math.pi
    sign = -1.0 if n % 2 else 1.0  # (-1)^N

    def integrand(t):
        g = 1.0 - sign * np.cos(A * t)
        return g * gegenbauer_c32_table(2 * m, t)[2 * m]

    h = 2.0 * (2 * m + 1) * (2 * m + 2) / (4 * m + 3)
    base = max(64, 8 * n + 8 * m)
    res = _refine_1d(integrand, base, abs_tol=1e-11, rel_tol=0.0)
    return QuadratureResult(res.value / h, res.error_estimate / h, res.evaluations)


def fn_squared_integral_oracle(N: int) -> QuadratureResult:
    """int_{-1}^{1} f_N(t)^2 dt, used by the self-convolution and Parseval
    checks."""
    n = _check_harmonic(N)

    def integrand(t):
        v = fn_values(n, t)
        return v * v

    base = max(64, 16 * n)
    return _refine_1d(integrand, base, abs_tol=1e-11, rel_tol=1e-9)


# Below this point the (1 - cos t)/t integrand switches to its series.
_CIN_SERIES_CUT = 1e-3


def cin_oracle(z: float) -> QuadratureResult:
    """Cin(z) by quadrature of the defining integral, independent of
    special_functions.cin."""
    if z < 0:
        raise DomainError(f"cin_oracle requires z >= 0, got {z!r}")
    z = float(z)
    if z == 0.0:
        return QuadratureResult(0.0, 0.0, 0)
    a = min(z, _CIN_SERIES_CUT)
    # int_0^a by the integrand series: t/2 - t^3/24 + t^5/720 (a <= 1e-3, the
    # next term is < 1e-25 relative).
    head = a * a / 4.0 - a ** 4 / 96.0 + a ** 6 / 4320.0
    if z <= _CIN_SERIES_CUT:
        return QuadratureResult(head, 1e-16 * head, 0)

    half = 0.5 * (z - a)
    mid = 0.5 * (z + a)

    def integrand(x):
        t = half * x + mid
        return (1.0 - np.cos(t)) / t

    base = max(32, int(2 * z))
    res = _refine_1d(lambda x: half * integrand(x), base, abs_tol=1e-13, rel_tol=1e-12)
    return QuadratureResult(head + res.value, res.error_estimate, res.evaluations)

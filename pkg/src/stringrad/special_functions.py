"""Stable scalar evaluation of the special functions everything else uses:
Legendre P_l, Gegenbauer C_k^(3/2), spherical Bessel j_n, the entire cosine
integral Cin, and the regularized oscillatory factor f_N.
"""
import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

EULER_GAMMA = 0.5772156649015328606

# |t| may exceed 1 by at most this before we reject it.
ABSCISSA_TOL = 1e-12

# Inside |1 - |t|| < window the direct quotient for f_N loses about half the
# significant digits; a 3-term endpoint expansion takes over.
ENDPOINT_WINDOW = 1e-6

# Branch switch for Cin: power series below, gamma + log z - Ci(z) above.
CIN_SWITCH = 8.0


@dataclass(frozen=True)
class PolySequence:
    """Evaluations of a polynomial family at one abscissa, degrees 0..degree_max."""

    degree_max: int
    values: np.ndarray


@dataclass(frozen=True)
class BesselSequence:
    """j_0(x)..j_{order_max}(x) at a single non-negative argument."""

    order_max: int
    argument: float
    values: np.ndarray


def _clip_abscissa(t: float) -> float:
    if abs(t) > 1.0 + ABSCISSA_TOL:
        raise DomainError(f"abscissa {t!r} outside [-1, 1]")
    return min(1.0, max(-1.0, float(t)))


def _check_harmonic(N) -> int:
    if isinstance(N, float) and not N.is_integer():
        raise DomainError(f"harmonic index must be an integer, got {N!r}")
    n = int(N)
    if n < 1:
        raise DomainError(f"harmonic index must be >= 1, got {N!r}")
    return n


def legendre_all(degree_max: int, t: float) -> PolySequence:
    """P_0(t)..P_{degree_max}(t) by the three-term recurrence."""
    if degree_max < 0:
        raise DomainError("degree_max must be non-negative")
    t = _clip_abscissa(t)
    values = np.empty(degree_max + 1)
    values[0] = 1.0
    if degree_max >= 1:
        values[1] = t
    for l in range(1, degree_max):
        values[l + 1] = ((2 * l + 1) * t * values[l] - l * values[l - 1]) / (l + 1)
    return PolySequence(degree_max, values)


def legendre_derivative_all(degree_max: int, t: float) -> PolySequence:
    """P'_0(t)..P'_{degree_max}(t) via P'_{l+1} = (l+1) P_l + t P'_l.

    Stable on the whole closed interval, endpoints included.
    """
    if degree_max < 0:
        raise DomainError("degree_max must be non-negative")
    t = _clip_abscissa(t)
    P = legendre_all(degree_max, t).values
    values = np.empty(degree_max + 1)
    values[0] = 0.0
    for l in range(degree_max):
        values[l + 1] = (l + 1) * P[l] + t * values[l]
    return PolySequence(degree_max, values)


def gegenbauer_c32_all(degree_max: int, t: float) -> PolySequence:
    """C_0^(3/2)(t)..C_{degree_max}^(3/2)(t) via C_k^(3/2) = P'_{k+1}."""
    if degree_max < 0:
        raise DomainError("degree_max must be non-negative")
    t = _clip_abscissa(t)
    dP = legendre_derivative_all(degree_max + 1, t).values
    return PolySequence(degree_max, dP[1:].copy())


def gegenbauer_c32_recurrence(degree_max: int, t: float) -> PolySequence:
    """Same values by the Gegenbauer three-term recurrence (cross-check route)."""
    if degree_max < 0:
        raise DomainError("degree_max must be non-negative")
    t = _clip_abscissa(t)
    values = np.empty(degree_max + 1)
    values[0] = 1.0
    if degree_max >= 1:
        values[1] = 3.0 * t
    for k in range(2, degree_max + 1):
        values[k] = ((2 * k + 1) * t * values[k - 1] - (k + 1) * values[k - 2]) / k
    return PolySequence(degree_max, values)


# Downward (Miller) recurrence start-order padding.
def _miller_start(order_max: int, x: float) -> int:
    return order_max + int(math.ceil(15.0 + 0.5 * x))


def spherical_bessel_all(order_max: int, x: float) -> BesselSequence:
    """j_0(x)..j_{order_max}(x), x >= 0.

    Upward recurrence from the analytic seeds where it is stable (n <= x),
    downward Miller recurrence with rescaling for the super-exponential tail.
    The downward pass is normalized against the largest upward-trusted entry;
    matching at j_0 alone is ill-conditioned exactly at x = N*pi where
    j_0 vanishes.
    """
    if order_max < 0:
        raise DomainError("order_max must be non-negative")
    if x < 0:
        raise DomainError(f"argument must be non-negative, got {x!r}")
    x = float(x)
    if x == 0.0:
        values = np.zeros(order_max + 1)
        values[0] = 1.0
        return BesselSequence(order_max, x, values)
    return _bessel_from_seeds(order_max, x, math.sin(x), math.cos(x))


def spherical_bessel_half_period(order_max: int, N: int) -> BesselSequence:
    """j_0(N pi)..j_{order_max}(N pi) with the trigonometric seeds taken at
    the exact argument: sin(N pi) = 0, cos(N pi) = (-1)^N.

    The rounded product fl(N pi) leaves a residual sin of order N*eps; seeded
    with it, near-zero table entries such as j_2(N pi) pick up relative errors
    around 1e-12 that downstream identities (which assume the exact argument)
    amplify. Exact seeds restore full precision at negligible cost.
    """
    n = _check_harmonic(N)
    if order_max < 0:
        raise DomainError("order_max must be non-negative")
    cosx = 1.0 if n % 2 == 0 else -1.0
    return _bessel_from_seeds(order_max, n * math.pi, 0.0, cosx)


def _bessel_from_seeds(
    order_max: int, x: float, sinx: float, cosx: float
) -> BesselSequence:
    values = np.zeros(order_max + 1)
    values[0] = sinx / x
    if order_max == 0:
        return BesselSequence(order_max, x, values)
    values[1] = sinx / (x * x) - cosx / x

    trusted = min(order_max, max(1, int(math.floor(x))))
    for n in range(2, trusted + 1):
        values[n] = (2 * n - 1) / x * values[n - 1] - values[n - 2]

    if order_max > trusted:
        start = _miller_start(order_max, x)
        unnorm = np.zeros(order_max + 1)
        f_up = 0.0  # f_{m+1}
        f_cur = 1e-30  # f_m, arbitrary tail seed
        for m in range(start, 0, -1):
            f_down = (2 * m + 1) / x * f_cur - f_up
            f_up, f_cur = f_cur, f_down
            if abs(f_cur) > 1e250:
                f_cur *= 1e-250
                f_up *= 1e-250
                unnorm *= 1e-250
            if m - 1 <= order_max:
                unnorm[m - 1] = f_cur
        match = int(np.argmax(np.abs(values[: trusted + 1])))
        if unnorm[match] == 0.0:
            raise DomainError(
                f"Miller normalization failed at order {match}, x={x!r}"
            )
        scale = values[match] / unnorm[match]
        values[trusted + 1 :] = unnorm[trusted + 1 :] * scale

    return BesselSequence(order_max, x, values)


def _cosine_integral_large(x: float) -> float:
    """Ci(x) for x >= CIN_SWITCH via the continued fraction for E1(ix).

    Ci(x) = -Re E1(ix); modified Lentz evaluation of the standard continued
    fraction, which converges quickly in this regime (a truncated divergent
    asymptotic series cannot reach 1e-12 at the branch seam).
    """
    z = complex(0.0, x)
    b = z + 1.0
    c = complex(1e308, 0.0)
    d = 1.0 / b
    h = d
    for i in range(1, 400):
        a = -float(i * i)
        b += 2.0
        d = 1.0 / (a * d + b)
        c = b + a / c
        delta = c * d
        h *= delta
        if abs(delta - 1.0) < 1e-16:
            break
    e1 = h * cmath.exp(-z)
    return -e1.real


def cin(z: float) -> float:
    """Cin(z) = integral_0^z (1 - cos t)/t dt for z >= 0."""
    if z < 0:
        raise DomainError(f"cin requires z >= 0, got {z!r}")
    z = float(z)
    if z == 0.0:
        return 0.0
    if z <= CIN_SWITCH:
        # Alternating series sum_{k>=1} (-1)^(k+1) z^(2k) / (2k (2k)!),
        # accumulated with compensated (Kahan) summation.
        total = 0.0
        comp = 0.0
        u = 1.0  # z^(2k) / (2k)!
        for k in range(1, 200):
            u *= z * z / ((2 * k - 1) * (2 * k))
            term = u / (2 * k) if k % 2 == 1 else -u / (2 * k)
            y = term - comp
            t = total + y
            comp = (t - total) - y
            total = t
            if abs(term) < 1e-18 * abs(total) + 1e-300:
                break
        return total
    return EULER_GAMMA + math.log(z) - _cosine_integral_large(z)


def f_eval(N: int, t: float) -> float:
    """f_N(t) = [1 - (-1)^N cos(N pi t)] / (1 - t^2), regularized.

    Half-angle forms keep the numerator cancellation-free; inside the
    endpoint window a 3-term expansion in s = 1 - |t| takes over and the
    endpoints themselves return exactly 0.
    """
    n = _check_harmonic(N)
    t = _clip_abscissa(t)
    A = n * math.pi
    s = 1.0 - abs(t)
    if s < ENDPOINT_WINDOW:
        xe = 0.5 * A * s
        return (A * A * s / (2.0 * (2.0 - s))) * (
            1.0 - xe * xe / 3.0 + 2.0 * xe ** 4 / 45.0
        )
    half = 0.5 * A * t
    if n % 2 == 0:
        num = 2.0 * math.sin(half) ** 2
    else:
        num = 2.0 * math.cos(half) ** 2
    return num / (1.0 - t * t)

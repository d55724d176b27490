"""Class I methods: Taylor expansion of f_N in the monomial basis, closed-form
angular moments with an independent Gaussian-lifting cross-check, the hybrid
projection onto Legendre polynomials, and the double-sum assembly of I(N, alpha)
whose large-N breakdown is the library's instability demonstration.
"""
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .spectral import LegendreSpectrum
from .special_functions import _check_harmonic

_LOG_4PI = math.log(4.0 * math.pi)


@dataclass(frozen=True)
class MonomialExpansion:
    """Taylor coefficients d_{2k} of f_N plus cancellation diagnostics.

    cancellation_metric is the peak magnitude reached by the alternating
    partial sums (the intermediate d values) relative to the converged
    coefficient scale max(|d_{2 k_max}|, 1); its logarithm grows like N*pi.
    """

    N: int
    k_max: int
    d: np.ndarray
    cancellation_metric: float


@dataclass(frozen=True)
class AngularMoment:
    """J_{2k,2j}(alpha) = integral over S^2 of (u.z)^{2k} (u.a)^{2j}."""

    k: int
    j: int
    cos_alpha: float
    value: float


def default_k_max(N: int) -> int:
    """Truncation order covering the Taylor turning point of cos(N pi t)."""
    return int(math.ceil(1.5 * N * math.pi)) + 10


def taylor_coefficients(N: int, k_max: int) -> MonomialExpansion:
    """d_{2k} for k = 0..k_max from the coefficient-matching recurrence.

    d_{2k} = -(-1)^N sum_{j=1..k} (-1)^j A^{2j}/(2j)! + (1 - (-1)^N), A = N pi.
    Each power/factorial term is built multiplicatively. Overflow of an
    intermediate is raised, not masked: it is a reportable outcome of the
    instability study.
    """
    n = _check_harmonic(N)
    if k_max < 0:
        raise DomainError("k_max must be non-negative")
    A = n * math.pi
    sign_n = -1.0 if n % 2 else 1.0  # (-1)^N
    base = 1.0 - sign_n
    d = np.empty(k_max + 1)
    d[0] = base
    partial = 0.0
    u = 1.0  # A^(2j) / (2j)!
    for j in range(1, k_max + 1):
        u *= A * A / ((2 * j - 1) * (2 * j))
        partial += -u if j % 2 else u
        d[j] = -sign_n * partial + base
        if not math.isfinite(d[j]):
            raise OverflowError(
                f"taylor_coefficients overflow at N={n}, k={j}: "
                "alternating partial sums exceed binary64 range"
            )
    peak = float(np.max(np.abs(d)))
    # The analytic limit of the tail coefficients is 0 (f_N is entire), so
    # the zero-guard supplies the denominator; the computed tail entries are
    # pure rounding noise at large N and must not be used here.
    metric = max(1.0, peak)
    return MonomialExpansion(n, k_max, d, metric)


def _log_moment(k: int, j: int, cos_alpha: float) -> float:
    """log J_{2k,2j}(alpha); all terms of the inner sum are positive."""
    lg = math.lgamma
    pref = (
        _LOG_4PI
        + lg(2 * k + 1)
        + lg(2 * j + 1)
        + lg(k + j + 1)
        - lg(2 * k + 2 * j + 2)
    )
    logs = [-lg(k + 1) - lg(j + 1)]
    if cos_alpha != 0.0:
        l2c = math.log(2.0 * abs(cos_alpha))
        for c in range(1, min(k, j) + 1):
            logs.append(
                2 * c * l2c - lg(k - c + 1) - lg(j - c + 1) - lg(2 * c + 1)
            )
    top = max(logs)
    inner = math.fsum(math.exp(x - top) for x in logs)
    return pref + top + math.log(inner)


def angular_moment(k: int, j: int, cos_alpha: float) -> AngularMoment:
    """Closed form of J_{2k,2j}(alpha) from the sinh(K)/K generating function.

    Only the s = k + j term of the expansion survives the coefficient
    extraction, leaving
        J = 4 pi (2k)! (2j)! (k+j)! / (2k+2j+1)!
            * sum_c (2 cos a)^{2c} / ((k-c)! (j-c)! (2c)!),
    evaluated in log space for large k + j.
    """
    if k < 0 or j < 0:
        raise DomainError("moment orders must be non-negative")
    if abs(cos_alpha) > 1.0:
        raise DomainError("cos_alpha must lie in [-1, 1]")
    ka, jb = (k, j) if k <= j else (j, k)
    value = math.exp(_log_moment(ka, jb, cos_alpha))
    return AngularMoment(k, j, float(cos_alpha), value)


def angular_moment_gauss_check(k: int, j: int, cos_alpha: float) -> float:
    """J_{2k,2j} by the independent Gaussian-lifting route.

    Extracts the lambda^{2k} mu^{2j} coefficient of
    exp((l^2 + m^2 + 2 l m cos a)/4) by trinomial expansion, multiplies by
    (2k)! (2j)! pi^{3/2}, and divides by (1/2) Gamma(k+j+3/2). Exists purely
    to cross-validate angular_moment, so it deliberately uses exact integer
    factorials rather than the log-space path.
    """
    if k < 0 or j < 0:
        raise DomainError("moment orders must be non-negative")
    if k + j > 40:
        raise DomainError("gauss check limited to k + j <= 40")
    fact = math.factorial
    inner = 0.0
    for c in range(min(k, j) + 1):
        num = (2.0 * cos_alpha) ** (2 * c)
        inner += num / float(fact(k - c) * fact(j - c) * fact(2 * c))
    coeff = inner / 4.0 ** (k + j)
    M = math.pi ** 1.5 * float(fact(2 * k)) * float(fact(2 * j)) * coeff
    return M / (0.5 * math.gamma(k + j + 1.5))


def _log_moment_matrix(k_max: int, cos_alpha: float) -> np.ndarray:
    """Matrix of log J_{2k,2j}(alpha) for 0 <= k, j <= k_max."""
    out = np.empty((k_max + 1, k_max + 1))
    for k in range(k_max + 1):
        for j in range(k, k_max + 1):
            v = _log_moment(k, j, cos_alpha)
            out[k, j] = v
            out[j, k] = v
    return out


def monomial_integral(N: int, alpha: float, k_max: int):
    """Truncated double sum I(N, alpha) = sum_{k,j} d_{2k} d_{2j} J_{2k,2j}.

    Returns (value, diagnostics). No accuracy promise at large N: a wildly
    wrong value paired with a large cancellation_metric is the intended
    behavior, demonstrating the instability of the monomial methods.
    """
    if not 0.0 < alpha < math.pi:
        raise DomainError(f"alpha must lie in (0, pi), got {alpha!r}")
    expansion = taylor_coefficients(N, k_max)
    d = expansion.d
    with np.errstate(divide="ignore"):
        log_d = np.log(np.abs(d))
    sign_d = np.sign(d)
    logJ = _log_moment_matrix(k_max, math.cos(alpha))
    with np.errstate(over="raise"):
        try:
            mags = np.exp(log_d[:, None] + log_d[None, :] + logJ)
        except FloatingPointError as exc:
            raise OverflowError(
                f"monomial double sum overflow at N={N}, k_max={k_max}"
            ) from exc
    terms = sign_d[:, None] * sign_d[None, :] * mags
    if not np.all(np.isfinite(terms)):
        raise OverflowError(
            f"monomial double sum overflow at N={N}, k_max={k_max}"
        )
    # Fixed summation order (row-major) for reproducible output.
    value = float(terms.sum())
    return value, expansion


def monomial_to_legendre(N: int, k_max: int, m_max: int) -> LegendreSpectrum:
    """Hybrid method: project the truncated Taylor series onto even Legendre.

    Uses the closed-form change of basis
        t^{2k} = sum_m T_{k,m} P_{2m}(t),
        T_{k,m} = (4m+1) (2k)! / (2^{k-m} (k-m)! (2k+2m+1)!!),
    with the double factorial expanded through ordinary factorials in log
    space.
    """
    if m_max > k_max:
        raise DomainError(f"m_max={m_max} exceeds k_max={k_max}")
    if m_max < 0:
        raise DomainError("m_max must be non-negative")
    expansion = taylor_coefficients(N, k_max)
    d = expansion.d
    lg = math.lgamma
    ln2 = math.log(2.0)
    C = np.empty(m_max + 1)
    last_term = 0.0
    for m in range(m_max + 1):
        acc = 0.0
        for k in range(m, k_max + 1):
            logT = (
                math.log(4 * m + 1)
                + lg(2 * k + 1)
                - (k - m) * ln2
                - lg(k - m + 1)
                - (lg(2 * k + 2 * m + 2) - (k + m) * ln2 - lg(k + m + 1))
            )
            term = float(d[k]) * math.exp(logT)
            acc += term
            if k == k_max:
                last_term = abs(term)
        C[m] = acc
    A = N * math.pi
    return LegendreSpectrum(
        N=int(N),
        A=A,
        j_max=m_max,
        C=C,
        method="monomial",
        tail_estimate=last_term,
    )


def monomial_t_coefficient(k: int, m: int) -> float:
    """T_{k,m} in the expansion t^{2k} = sum_m T_{k,m} P_{2m}(t)."""
    if m > k or m < 0:
        raise DomainError("need 0 <= m <= k")
    lg = math.lgamma
    ln2 = math.log(2.0)
    logT = (
        math.log(4 * m + 1)
        + lg(2 * k + 1)
        - (k - m) * ln2
        - lg(k - m + 1)
        - (lg(2 * k + 2 * m + 2) - (k + m) * ln2 - lg(k + m + 1))
    )
    return math.exp(logT)

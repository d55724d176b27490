"""Assembly of I(N, alpha) from a Legendre spectrum via the Funk-Hecke
diagonal sum, the physical prefactor giving P_N, the shared truncation
policy, and multi-harmonic spectrum tables.
"""
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ConvergenceError, DomainError, NotSPDError
from .monomial import default_k_max, monomial_integral
from .spectral import (
    LegendreSpectrum,
    c0_exact,
    galerkin_spectrum,
    gegenbauer_b,
    gegenbauer_legendre,
    volterra_coefficients,
)
from .special_functions import _check_harmonic, legendre_all

DEFAULT_TOL = 1e-10

SPECTRAL_METHODS = ("galerkin", "volterra", "gegenbauer")
METHODS = SPECTRAL_METHODS + ("monomial",)


@dataclass(frozen=True)
class LoopParams:
    """Physical inputs for one harmonic: N, opening angle, G mu^2 scale."""

    N: int
    alpha: float
    g_mu2: float
    loop_length: float | None = None

    def __post_init__(self):
        _check_harmonic(self.N)
        if not 0.0 < self.alpha < math.pi:
            raise DomainError(f"alpha must lie in (0, pi), got {self.alpha!r}")
        if self.g_mu2 <= 0:
            raise DomainError("g_mu2 must be positive")
        if self.loop_length is not None and self.loop_length <= 0:
            raise DomainError("loop_length must be positive")


@dataclass(frozen=True)
class SpectrumRow:
    n: int
    i_value: float
    p_value: float
    omega: float | None
    j_max: int
    tail_estimate: float
    error: str | None = None


@dataclass(frozen=True)
class PowerSpectrum:
    alpha: float
    g_mu2: float
    method: str
    rows: list[SpectrumRow] = field(default_factory=list)


def choose_jmax(N: int, tol: float) -> int:
    """Truncation policy: j_max = ceil(A/2) + pad, pad grown from 8 until the
    Gegenbauer tail satisfies |b_{2 j_max}| * max(1, A) < tol."""
    n = _check_harmonic(N)
    if tol <= 0:
        raise DomainError("tol must be positive")
    A = n * math.pi
    base = int(math.ceil(A / 2.0))
    pad = 8
    while pad <= 1024:
        m = base + pad
        tail = abs(float(gegenbauer_b(n, m).b[m]))
        if tail * max(1.0, A) < tol:
            return base + pad
        pad += 8
    raise ConvergenceError(f"truncation pad search failed for N={n}, tol={tol}")


def funk_hecke_terms(spectrum: LegendreSpectrum, cos_alpha: float) -> np.ndarray:
    """Individual terms 4 pi C_{2j}^2/(4j+1) P_{2j}(cos_alpha), j ascending."""
    if abs(cos_alpha) > 1.0:
        raise DomainError("cos_alpha must lie in [-1, 1]")
    P = legendre_all(2 * spectrum.j_max, cos_alpha).values
    j = np.arange(spectrum.j_max + 1)
    return 4.0 * math.pi * spectrum.C ** 2 / (4 * j + 1) * P[2 * j]


def funk_hecke(spectrum: LegendreSpectrum, cos_alpha: float) -> float:
    """I(N, alpha) = 4 pi sum_j C_{2j}^2/(4j+1) P_{2j}(cos_alpha), truncated.

    Summed in fixed ascending-j order for reproducibility.
    """
    return float(funk_hecke_terms(spectrum, cos_alpha).sum())


def power(params: LoopParams, i_value: float) -> float:
    """P_N = 32 G mu^2 / (pi^3 N^2) * I(N, alpha)."""
    if i_value < 0:
        raise DomainError("i_value must be non-negative")
    return 32.0 * params.g_mu2 / (math.pi ** 3 * params.N ** 2) * i_value


def omega_n(params: LoopParams) -> float:
    """Harmonic frequency omega_N = 4 pi N / L (requires loop_length)."""
    if params.loop_length is None:
        raise DomainError("loop_length is required for omega_N")
    return 4.0 * math.pi * params.N / params.loop_length


def build_spectrum(method: str, N: int, j_max: int) -> LegendreSpectrum:
    """Construct the Legendre spectrum of f_N by the named spectral method."""
    if method == "galerkin":
        return galerkin_spectrum(N, j_max)
    if method == "volterra":
        return volterra_coefficients(N, j_max, c0_exact(N))
    if method == "gegenbauer":
        return gegenbauer_legendre(N, j_max)
    raise DomainError(f"unknown spectral method {method!r}")


def spectrum_scan(
    n_min: int,
    n_max: int,
    alpha: float,
    g_mu2: float,
    method: str,
    tol: float = DEFAULT_TOL,
    loop_length: float | None = None,
) -> PowerSpectrum:
    """One row per N in [n_min, n_max], each with its own truncation.

    A row-level numerical failure (e.g. monomial overflow at large N) is
    recorded in the row instead of aborting the scan. Rows are emitted in
    ascending N regardless of evaluation order.
    """
    if not 1 <= n_min <= n_max:
        raise DomainError(f"need 1 <= n_min <= n_max, got {n_min}..{n_max}")
    if method not in METHODS:
        raise DomainError(f"unknown method {method!r}")
    cos_a = math.cos(alpha)
    rows = []
    for n in range(n_min, n_max + 1):
        params = LoopParams(n, alpha, g_mu2, loop_length)
        omega = omega_n(params) if loop_length is not None else None
        try:
            if method == "monomial":
                k_max = default_k_max(n)
                i_value, _ = monomial_integral(n, alpha, k_max)
                j_max, tail = k_max, 0.0
            else:
                j_max = choose_jmax(n, tol)
                spec = build_spectrum(method, n, j_max)
                terms = funk_hecke_terms(spec, cos_a)
                i_value = float(terms.sum())
                tail = abs(float(terms[-1]))
            # Raw prefactor application: an unstable (negative) monomial
            # I value must propagate honestly rather than be clamped.
            p_value = 32.0 * g_mu2 / (math.pi ** 3 * n ** 2) * i_value
            rows.append(
                SpectrumRow(
                    n=n,
                    i_value=i_value,
                    p_value=p_value,
                    omega=omega,
                    j_max=j_max,
                    tail_estimate=tail,
                )
            )
        except (OverflowError, ConvergenceError, NotSPDError) as exc:
            rows.append(
                SpectrumRow(
                    n=n,
                    i_value=math.nan,
                    p_value=math.nan,
                    omega=omega,
                    j_max=0,
                    tail_estimate=math.nan,
                    error=str(exc),
                )
            )
    return PowerSpectrum(alpha=alpha, g_mu2=g_mu2, method=method, rows=rows)

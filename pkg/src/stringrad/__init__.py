"""Cosmic-string loop radiation integral I(N, alpha) and harmonic power
spectrum P_N, computed by six analytical methods and cross-validated against
independent quadrature oracles.
"""

__version__ = "0.1.0"

from .kernels import BACKEND as kernel_backend  # noqa: F401
from .monomial import (  # noqa: F401
    AngularMoment,
    MonomialExpansion,
    angular_moment,
    angular_moment_gauss_check,
    monomial_integral,
    monomial_to_legendre,
    taylor_coefficients,
)
from .oracle import (  # noqa: F401
    QuadratureResult,
    cin_oracle,
    gegenbauer_projection_oracle,
    legendre_projection_oracle,
    sphere_integral_oracle,
)
from .special_functions import (  # noqa: F401
    BesselSequence,
    PolySequence,
    cin,
    f_eval,
    gegenbauer_c32_all,
    legendre_all,
    spherical_bessel_all,
)
from .spectral import (  # noqa: F401
    GegenbauerCoeffs,
    LegendreSpectrum,
    TridiagonalSystem,
    c0_exact,
    galerkin_spectrum,
    galerkin_system,
    gegenbauer_b,
    gegenbauer_legendre,
    solve_spd_tridiagonal,
    volterra_coefficients,
)
from .spectrum import (  # noqa: F401
    LoopParams,
    PowerSpectrum,
    SpectrumRow,
    build_spectrum,
    choose_jmax,
    funk_hecke,
    funk_hecke_terms,
    power,
    spectrum_scan,
)

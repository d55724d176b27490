"""Acceptance gate: each test checks one release criterion at a pinned
tolerance and prints a single pass/fail line (run with `pytest -s` or `-v`
to see them)."""
import math
import subprocess
import sys
import time

import numpy as np

from stringrad.monomial import default_k_max, monomial_integral, taylor_coefficients
from stringrad.oracle import (
    fn_squared_integral_oracle,
    legendre_projection_oracle,
    sphere_integral_oracle,
)
from stringrad.spectral import (
    c0_exact,
    galerkin_system,
    gegenbauer_legendre,
    solve_spd_tridiagonal,
    volterra_coefficients,
)
from stringrad.spectrum import (
    LoopParams,
    build_spectrum,
    choose_jmax,
    funk_hecke,
    power,
)
from stringrad.monomial import angular_moment


def _report(label: str, ok: bool, detail: str):
    status = "PASS" if ok else "FAIL"
    print(f"[{label}] {status}: {detail}")
    assert ok, f"{label} failed: {detail}"


def test_criterion_1_c0_against_projection_oracle():
    start = time.perf_counter()
    worst = 0.0
    for n in range(1, 51):
        dev = abs(c0_exact(n) - legendre_projection_oracle(n, 0).value)
        worst = max(worst, dev)
    elapsed = time.perf_counter() - start
    _report(
        "zeroth-coefficient-closed-form",
        worst <= 1e-10 and elapsed < 5.0,
        f"max |closed form - quadrature| = {worst:.3e} over N=1..50 "
        f"(tol 1e-10) in {elapsed:.2f}s",
    )


def test_criterion_2_cross_method_coefficients():
    start = time.perf_counter()
    worst = 0.0
    for n in (1, 2, 3, 5, 10, 25, 50, 100):
        j_max = choose_jmax(n, 1e-10)
        tables = [build_spectrum(m, n, j_max).C for m in ("galerkin", "volterra", "gegenbauer")]
        for a in tables:
            for b in tables:
                for x, y in zip(a, b):
                    bound = max(1e-8 * abs(y), 1e-12)
                    dev = abs(x - y)
                    worst = max(worst, dev / bound)
                    assert dev <= bound, (n, x, y)
    elapsed = time.perf_counter() - start
    _report(
        "cross-method-coefficient-agreement",
        elapsed < 10.0,
        f"worst deviation at {worst:.3e} of the max(1e-8 rel, 1e-12 abs) budget "
        f"over N in {{1,2,3,5,10,25,50,100}} in {elapsed:.2f}s",
    )


def test_criterion_3_integral_against_sphere_oracle():
    start = time.perf_counter()
    worst = 0.0
    for n in range(1, 5):
        spec = gegenbauer_legendre(n, choose_jmax(n, 1e-10))
        for alpha in (math.pi / 6, math.pi / 4, math.pi / 3, math.pi / 2):
            got = funk_hecke(spec, math.cos(alpha))
            want = sphere_integral_oracle(n, alpha).value
            worst = max(worst, abs(got - want) / abs(want))
    elapsed = time.perf_counter() - start
    _report(
        "integral-vs-quadrature-oracle",
        worst <= 1e-6 and elapsed < 60.0,
        f"max relative deviation {worst:.3e} (tol 1e-6) over 16 (N, alpha) "
        f"pairs in {elapsed:.2f}s",
    )


def test_criterion_4_self_convolution_identity():
    start = time.perf_counter()
    worst = 0.0
    for n in range(1, 7):
        spec = gegenbauer_legendre(n, choose_jmax(n, 1e-10))
        got = funk_hecke(spec, 1.0)
        want = 2.0 * math.pi * fn_squared_integral_oracle(n).value
        worst = max(worst, abs(got - want) / abs(want))
    elapsed = time.perf_counter() - start
    _report(
        "aligned-axis-self-convolution",
        worst <= 1e-6 and elapsed < 10.0,
        f"max relative deviation {worst:.3e} (tol 1e-6) over N=1..6 in {elapsed:.2f}s",
    )


def test_criterion_5_monomial_stability_profile():
    start = time.perf_counter()
    # stable regime
    worst_small = 0.0
    for n in (1, 2, 3):
        value, _ = monomial_integral(n, math.pi / 2, default_k_max(n))
        spec = gegenbauer_legendre(n, choose_jmax(n, 1e-10))
        ref = funk_hecke(spec, 0.0)
        worst_small = max(worst_small, abs(value - ref) / abs(ref))
    # cancellation growth
    ns = [4, 8, 12, 16, 20]
    logs = [
        math.log(taylor_coefficients(n, default_k_max(n)).cancellation_metric)
        for n in ns
    ]
    slope = float(np.polyfit(ns, logs, 1)[0])
    slope_ok = 0.75 * math.pi <= slope <= 1.25 * math.pi
    # breakdown by N = 20
    v20, _ = monomial_integral(20, math.pi / 2, default_k_max(20))
    ref20 = funk_hecke(gegenbauer_legendre(20, choose_jmax(20, 1e-10)), 0.0)
    broken = abs(v20 - ref20) / abs(ref20) > 1e-2
    elapsed = time.perf_counter() - start
    _report(
        "monomial-instability-demonstration",
        worst_small <= 1e-6 and slope_ok and broken and elapsed < 10.0,
        f"stable-regime deviation {worst_small:.3e} (tol 1e-6); "
        f"log-cancellation slope {slope:.3f} vs pi={math.pi:.3f} (+/-25%); "
        f"N=20 relative error {abs(v20 - ref20) / abs(ref20):.3e} > 1e-2; "
        f"{elapsed:.2f}s",
    )


def test_criterion_6_linear_complexity_of_stable_methods():
    start = time.perf_counter()

    def best_of(fn, repeats=9):
        best = math.inf
        for _ in range(repeats):
            t0 = time.perf_counter()
            fn()
            best = min(best, time.perf_counter() - t0)
        return best

    ns = (100, 200, 400)
    # warm up caches and the allocator before timing
    volterra_coefficients(100, math.ceil(50 * math.pi) + 16, c0_exact(100))
    solve_spd_tridiagonal(galerkin_system(100, math.ceil(50 * math.pi) + 16))
    volterra_times = []
    galerkin_times = []
    for n in ns:
        j_max = math.ceil(n * math.pi / 2) + 16
        volterra_times.append(
            best_of(lambda n=n, j=j_max: volterra_coefficients(n, j, c0_exact(n)))
        )
        sys_ = galerkin_system(n, j_max)
        galerkin_times.append(best_of(lambda s=sys_: solve_spd_tridiagonal(s)))
    ratios = [
        volterra_times[1] / volterra_times[0],
        volterra_times[2] / volterra_times[1],
        galerkin_times[1] / galerkin_times[0],
        galerkin_times[2] / galerkin_times[1],
    ]
    ok = all(1.3 <= r <= 3.0 for r in ratios)
    elapsed = time.perf_counter() - start
    _report(
        "linear-work-growth",
        ok and elapsed < 30.0,
        "doubling-time ratios "
        + ", ".join(f"{r:.2f}" for r in ratios)
        + f" all within [1.3, 3.0] for N in {ns}; {elapsed:.2f}s",
    )


def test_criterion_7_symmetry_suite():
    start = time.perf_counter()
    # reflection symmetry of the integral
    worst_refl = 0.0
    for n in (1, 5, 13):
        spec = gegenbauer_legendre(n, choose_jmax(n, 1e-10))
        for alpha in (math.pi / 6, math.pi / 3):
            a = funk_hecke(spec, math.cos(alpha))
            b = funk_hecke(spec, math.cos(math.pi - alpha))
            worst_refl = max(worst_refl, abs(a - b) / abs(a))
    # evenness of the source profile
    from stringrad.special_functions import f_eval

    even_ok = all(
        f_eval(n, t) == f_eval(n, -t) for n in (1, 2, 5) for t in (0.1, 0.5, 0.93)
    )
    # angular moment symmetry and closed low-order values
    sym_ok = all(
        angular_moment(k, j, 0.4).value == angular_moment(j, k, 0.4).value
        for k in range(5)
        for j in range(5)
    )
    m00 = angular_moment(0, 0, 0.3).value
    m10 = angular_moment(1, 0, 0.3).value
    closed_ok = (
        abs(m00 - 4 * math.pi) <= 1e-12 * 4 * math.pi
        and abs(m10 - 4 * math.pi / 3) <= 1e-12 * 4 * math.pi
    )
    elapsed = time.perf_counter() - start
    _report(
        "symmetry-suite",
        worst_refl <= 1e-12 and even_ok and sym_ok and closed_ok and elapsed < 5.0,
        f"reflection deviation {worst_refl:.3e} (tol 1e-12); profile evenness, "
        f"moment symmetry, and closed moments (4pi, 4pi/3) all exact; "
        f"{elapsed:.2f}s",
    )


def test_criterion_8_power_scaling_exact():
    start = time.perf_counter()
    i_value = 5.0
    base = power(LoopParams(1, 1.0, 1.0), i_value)
    # power-of-two scalings must be bitwise exact
    linear_exact = power(LoopParams(1, 1.0, 4.0), i_value) == 4.0 * base
    inverse_sq_exact = all(
        power(LoopParams(n, 1.0, 1.0), i_value) == base / (n * n) for n in (2, 4, 8)
    )
    # general scalings to within a couple of ulps
    worst = max(
        abs(power(LoopParams(1, 1.0, g), i_value) - g * base) / (g * base)
        for g in (3.5, 0.7, 1e-6)
    )
    worst = max(
        worst,
        max(
            abs(power(LoopParams(n, 1.0, 1.0), i_value) - base / (n * n))
            / (base / (n * n))
            for n in (3, 7, 10)
        ),
    )
    elapsed = time.perf_counter() - start
    _report(
        "power-prefactor-scaling",
        linear_exact and inverse_sq_exact and worst <= 1e-15 and elapsed < 1.0,
        f"P bitwise-linear in the tension parameter and bitwise 1/N^2 for "
        f"power-of-two scalings; general scalings within {worst:.2e} "
        f"(tol 1e-15); {elapsed:.2f}s",
    )


def test_criterion_9_cli_determinism():
    start = time.perf_counter()
    commands = [
        ["coeffs", "--N", "4"],
        ["integral", "--N", "6", "--alpha", "0.9"],
        ["spectrum", "--nmax", "5", "--format", "json"],
        ["compare", "--N", "3"],
        ["stability", "--nmax", "6"],
    ]
    ok = True
    for args in commands:
        runs = [
            subprocess.run(
                [sys.executable, "-m", "stringrad", *args],
                capture_output=True,
            )
            for _ in range(2)
        ]
        ok = ok and runs[0].stdout == runs[1].stdout
        ok = ok and runs[0].returncode == runs[1].returncode == 0
    elapsed = time.perf_counter() - start
    _report(
        "cli-byte-determinism",
        ok and elapsed < 10.0,
        f"all {len(commands)} commands byte-identical across repeated runs; "
        f"{elapsed:.2f}s",
    )

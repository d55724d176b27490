import math

import numpy as np
import pytest

from stringrad.errors import DomainError, NotSPDError
from stringrad.oracle import (
    fn_squared_integral_oracle,
    gegenbauer_projection_oracle,
    legendre_projection_oracle,
)
from stringrad.spectral import (
    TridiagonalSystem,
    c0_exact,
    galerkin_spectrum,
    galerkin_system,
    gegenbauer_b,
    gegenbauer_legendre,
    gegenbauer_norm,
    solve_spd_tridiagonal,
    volterra_coefficients,
)
from stringrad.spectrum import choose_jmax


def weighted_product_quadrature(l1: int, l2: int, nodes: int = 200) -> float:
    """Independent quadrature of int (1-t^2) P_l1 P_l2 dt."""
    x, w = np.polynomial.legendre.leggauss(nodes)
    P = np.polynomial.legendre.legvander(x, max(l1, l2))
    return float(np.sum(w * (1 - x * x) * P[:, l1] * P[:, l2]))


class TestGalerkinSystem:
    def test_rhs0_is_two(self):
        for n in (1, 2, 7, 30):
            rhs = galerkin_system(n, 8).rhs
            assert rhs[0] == pytest.approx(2.0, abs=1e-14)

    def test_g00(self):
        assert galerkin_system(1, 4).diag[0] == pytest.approx(4.0 / 3.0, rel=1e-15)

    def test_g01_quadrature(self):
        sys_ = galerkin_system(1, 4)
        assert sys_.off[0] == pytest.approx(weighted_product_quadrature(0, 2), abs=1e-12)

    def test_all_entries_vs_quadrature(self):
        sys_ = galerkin_system(3, 8)
        for i in range(9):
            l = 2 * i
            assert sys_.diag[i] == pytest.approx(
                weighted_product_quadrature(l, l), abs=1e-12
            )
        for i in range(8):
            l = 2 * i
            assert sys_.off[i] == pytest.approx(
                weighted_product_quadrature(l, l + 2), abs=1e-12
            )

    def test_diag_positive(self):
        assert np.all(galerkin_system(5, 30).diag > 0.0)


class TestSolver:
    def test_identity_like(self):
        b = np.array([1.0, -2.0, 3.0])
        sys_ = TridiagonalSystem(3, np.ones(3), np.zeros(2), b)
        np.testing.assert_allclose(solve_spd_tridiagonal(sys_), b)

    def test_hand_solvable(self):
        sys_ = TridiagonalSystem(
            2, np.array([2.0, 2.0]), np.array([1.0]), np.array([3.0, 3.0])
        )
        np.testing.assert_allclose(solve_spd_tridiagonal(sys_), [1.0, 1.0])

    def test_residual(self):
        sys_ = galerkin_system(5, 20)
        x = solve_spd_tridiagonal(sys_)
        res = sys_.diag * x
        res[:-1] += sys_.off * x[1:]
        res[1:] += sys_.off * x[:-1]
        res -= sys_.rhs
        assert np.max(np.abs(res)) <= 1e-12 * np.max(np.abs(sys_.rhs))

    def test_non_spd_raises(self):
        sys_ = TridiagonalSystem(
            2, np.array([1.0, 0.1]), np.array([1.0]), np.array([1.0, 1.0])
        )
        with pytest.raises(NotSPDError):
            solve_spd_tridiagonal(sys_)

    @pytest.mark.parametrize("n", [1, 4, 12])
    def test_spd_up_to_twice_a(self, n):
        j_max = int(2 * n * math.pi) + 1
        solve_spd_tridiagonal(galerkin_system(n, j_max))  # must not raise


class TestC0Exact:
    @pytest.mark.parametrize("n", [1, 2])
    def test_against_projection_oracle(self, n):
        assert c0_exact(n) == pytest.approx(
            legendre_projection_oracle(n, 0).value, abs=1e-10
        )

    def test_monotone(self):
        vals = [c0_exact(n) for n in range(1, 51)]
        assert np.all(np.diff(vals) > 0.0)


class TestVolterra:
    def test_t1_degenerate_at_zero(self):
        # j_0(N pi) = 0 so the j = 0 recurrence row carries no information;
        # the seed fully determines C_0.
        spec = volterra_coefficients(4, 6, c0_exact(4))
        assert spec.C[0] == c0_exact(4)

    def test_matches_gegenbauer_small(self):
        v = volterra_coefficients(1, 8, c0_exact(1))
        g = gegenbauer_legendre(1, 8)
        np.testing.assert_allclose(v.C, g.C, atol=1e-10)

    def test_matches_galerkin_large(self):
        j_max = choose_jmax(50, 1e-10)
        v = volterra_coefficients(50, j_max, c0_exact(50)).C
        g = galerkin_spectrum(50, j_max).C
        assert np.all(np.abs(v - g) <= np.maximum(1e-8 * np.abs(g), 1e-12))

    def test_seed_sensitivity_grows(self):
        j_max = 16
        base = volterra_coefficients(3, j_max, c0_exact(3)).C
        pert = volterra_coefficients(3, j_max, c0_exact(3) + 1e-6).C
        dev = np.abs(pert - base)
        assert dev[j_max] >= dev[1]

    def test_requires_jmax(self):
        with pytest.raises(DomainError):
            volterra_coefficients(2, 0, c0_exact(2))


class TestGegenbauer:
    def test_coefficient_bound(self):
        for n in (1, 4, 9):
            A = n * math.pi
            coeffs = gegenbauer_b(n, 30)
            m = np.arange(31)
            bound = A * (4 * m + 3) / ((2 * m + 1) * (2 * m + 2))
            assert np.all(np.abs(coeffs.b) <= bound)

    def test_b0_against_projection_oracle(self):
        got = gegenbauer_b(1, 0).b[0]
        want = gegenbauer_projection_oracle(1, 0).value
        assert got == pytest.approx(want, abs=1e-10)

    def test_more_projections(self):
        for n, m in [(2, 0), (2, 3), (5, 2)]:
            got = gegenbauer_b(n, m).b[m]
            want = gegenbauer_projection_oracle(n, m).value
            assert got == pytest.approx(want, abs=1e-10)

    def test_tail_decay(self):
        A = 4 * math.pi
        b = gegenbauer_b(4, 40).b
        for m in range(41):
            if 2 * m + 1 > A + 30:
                assert abs(b[m]) < 1e-15

    def test_norm(self):
        assert gegenbauer_norm(0) == pytest.approx(4.0 / 3.0, rel=1e-15)


class TestGegenbauerLegendre:
    def test_c0_is_exact(self):
        for n in (1, 3, 12):
            assert gegenbauer_legendre(n, 5).C[0] == c0_exact(n)

    def test_matches_volterra(self):
        g = gegenbauer_legendre(3, 12).C
        v = volterra_coefficients(3, 12, c0_exact(3)).C
        np.testing.assert_allclose(g, v, atol=1e-11)

    def test_c4_against_projection_oracle(self):
        got = gegenbauer_legendre(3, 4).C[2]
        want = legendre_projection_oracle(3, 4).value
        assert got == pytest.approx(want, abs=1e-8)

    def test_parseval_consistency(self):
        for n in range(1, 7):
            j_max = choose_jmax(n, 1e-10)
            C = gegenbauer_legendre(n, j_max).C
            j = np.arange(j_max + 1)
            partial = float(np.sum(2.0 * C**2 / (4 * j + 1)))
            full = fn_squared_integral_oracle(n).value
            assert partial <= full * (1 + 1e-9)
            assert (full - partial) / full < 1e-6

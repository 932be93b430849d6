"""Special-function tests: frozen values, independent oracles, identities."""

import cmath
import math

import mpmath as mp
import numpy as np
import pytest

from hypzeta.errors import ConvergenceError, PoleError
from hypzeta.special_functions import (
    EvalOptions,
    ZETA_PRIME_MINUS_ONE,
    digamma,
    gauss_multiplication_defect,
    log_barnes_gamma2,
    log_gamma,
    riemann_zeta,
    zeta_prime_minus_one,
)

mp.mp.dps = 30

EULER_GAMMA = 0.5772156649015328606065120900824024


class TestLogGamma:
    def test_half(self):
        assert abs(log_gamma(0.5) - math.log(math.sqrt(math.pi))) < 1e-14

    def test_one(self):
        assert abs(log_gamma(1.0)) < 1e-14

    def test_five_factorial(self):
        assert abs(log_gamma(5.0) - math.log(24.0)) < 1e-13

    @pytest.mark.parametrize("s", [0.0, -1.0, -2.0, -7.0])
    def test_poles(self, s):
        with pytest.raises(PoleError):
            log_gamma(s)

    def test_reflection_on_grid(self):
        # 100 points avoiding the integers
        for i in range(100):
            re = -2.3 + 4.7 * ((i * 37) % 100) / 99.0
            im = -4.0 + 8.0 * ((i * 53) % 100) / 99.0
            s = complex(round(re, 6), round(im, 6))
            if abs(s.imag) < 0.05 and abs(s.real - round(s.real)) < 0.05:
                s += 0.11 + 0.13j
            lhs = cmath.exp(log_gamma(s) + log_gamma(1.0 - s))
            rhs = math.pi / cmath.sin(math.pi * s)
            assert abs(lhs - rhs) <= 1e-10 * abs(rhs)


class TestDigamma:
    def test_one(self):
        assert abs(digamma(1.0) + EULER_GAMMA) < 1e-13

    def test_two_recurrence(self):
        assert abs(digamma(2.0) - (1.0 - EULER_GAMMA)) < 1e-13

    def test_half_series_oracle(self):
        # psi(1/2) = -gamma + sum_k (1/(k+1) - 1/(k+1/2)), Euler-Maclaurin tail
        cutoff = 1_000_000
        k = np.arange(cutoff, dtype=float)
        head = float(np.sum(1.0 / (k + 1.0) - 1.0 / (k + 0.5)))
        x = float(cutoff)
        tail = -math.log((x + 1.0) / (x + 0.5))
        tail += 0.5 * (1.0 / (x + 1.0) - 1.0 / (x + 0.5))
        tail -= (-1.0 / (x + 1.0) ** 2 + 1.0 / (x + 0.5) ** 2) / 12.0
        oracle = -EULER_GAMMA + head + tail
        assert abs(oracle - (-EULER_GAMMA - 2.0 * math.log(2.0))) < 1e-12
        assert abs(digamma(0.5) - oracle) < 1e-12

    def test_pole(self):
        with pytest.raises(PoleError):
            digamma(-3.0)

    def test_finite_difference_of_log_gamma(self):
        h = 1e-4
        for s in (0.7 + 0.3j, 2.4 - 1.1j, 5.0 + 0j, 1.5 + 4.0j):
            fd = (log_gamma(s + h) - log_gamma(s - h)) / (2.0 * h)
            assert abs(digamma(s) - fd) < 1e-6


class TestRiemannZeta:
    def test_basel(self):
        assert abs(riemann_zeta(2.0) - math.pi ** 2 / 6.0) < 1e-12

    def test_zero(self):
        assert abs(riemann_zeta(0.0) + 0.5) < 1e-12

    def test_minus_one(self):
        assert abs(riemann_zeta(-1.0) + 1.0 / 12.0) < 1e-12

    def test_pole(self):
        with pytest.raises(PoleError):
            riemann_zeta(1.0)

    def test_strip_against_mpmath(self):
        for re in np.linspace(-3.0, 4.0, 15):
            for im in np.linspace(-20.0, 20.0, 17):
                s = complex(re, im)
                if abs(s - 1.0) < 0.01:
                    continue
                ref = complex(mp.zeta(mp.mpc(re, im)))
                assert abs(riemann_zeta(s) - ref) <= 1e-11 * max(1.0, abs(ref))

    def test_near_eta_degenerate_points(self):
        # zeros of 1 - 2^(1-s) off the real axis must not hurt accuracy
        for s in (complex(1.0, 9.0647), complex(0.99, 18.129), complex(1.01, -9.06)):
            ref = complex(mp.zeta(mp.mpc(s.real, s.imag)))
            assert abs(riemann_zeta(s) - ref) <= 1e-12 * abs(ref)


class TestZetaPrimeMinusOne:
    def test_pinned_value(self):
        assert abs(zeta_prime_minus_one() + 0.165421143700450929) < 1e-14

    def test_sign(self):
        assert zeta_prime_minus_one() < 0

    def test_independent_oracle(self):
        # zeta'(2) by Euler-Maclaurin, mapped to -1 through the reflection
        # formula: zeta'(-1) = -(log 2pi + gamma - 1)/12 + zeta'(2)/(2 pi^2)
        n = 200_000
        k = np.arange(2, n, dtype=float)
        head = float(np.sum(np.log(k) / (k * k)))
        x = float(n)
        tail = (math.log(x) + 1.0) / x
        tail += 0.5 * math.log(x) / (x * x)
        tail -= (1.0 - 2.0 * math.log(x)) / (12.0 * x ** 3)
        zeta_prime_2 = -(head + tail)
        oracle = (
            -(math.log(2.0 * math.pi) + EULER_GAMMA - 1.0) / 12.0
            + zeta_prime_2 / (2.0 * math.pi ** 2)
        )
        assert abs(oracle - ZETA_PRIME_MINUS_ONE) < 1e-12

    def test_against_mpmath(self):
        assert abs(zeta_prime_minus_one() - float(mp.zeta(-1, derivative=1))) < 1e-14


class TestBarnesGamma2:
    def test_at_one(self):
        assert abs(log_barnes_gamma2(1.0)) < 1e-12

    def test_at_two(self):
        assert abs(log_barnes_gamma2(2.0)) < 1e-12

    def test_at_four_recursion_oracle(self):
        # G2(n+1) = G2(n)/Gamma(n) from G2(1) = 1 gives G2(4) = 1/2
        value = 1.0
        for n in (1, 2, 3):
            value /= math.gamma(n)
        assert abs(value - 0.5) == 0.0
        assert abs(cmath.exp(log_barnes_gamma2(4.0)) - value) < 1e-12

    @pytest.mark.parametrize("s", [0.0, -1.0, -5.0])
    def test_poles(self, s):
        with pytest.raises(PoleError):
            log_barnes_gamma2(s)

    def test_recursion_grid(self):
        for re in np.linspace(0.5, 5.0, 8):
            for im in np.linspace(-5.0, 5.0, 7):
                s = complex(re, im)
                lhs = cmath.exp(log_barnes_gamma2(s))
                rhs = cmath.exp(log_gamma(s)) * cmath.exp(log_barnes_gamma2(s + 1.0))
                assert abs(lhs - rhs) <= 1e-10 * abs(lhs)

    def test_against_mpmath_inverse_barnesg(self):
        for s in (0.5, 2.75, -2.3, complex(3.1, 2.2), complex(-4.5, -1.0), complex(0.6, 5.0)):
            ours = cmath.exp(log_barnes_gamma2(s))
            ref = complex(1 / mp.barnesg(mp.mpc(complex(s).real, complex(s).imag)))
            assert abs(ours - ref) <= 1e-11 * abs(ref)

    def test_convergence_error_for_small_cutoff(self):
        opts = EvalOptions(gamma2_cutoff=64)
        with pytest.raises(ConvergenceError):
            log_barnes_gamma2(9.5 + 3.0j, opts)


class TestGaussMultiplication:
    def test_degenerate(self):
        assert gauss_multiplication_defect(1.0, 1) == 0.0

    def test_m3_product_identity(self):
        assert gauss_multiplication_defect(1.0, 3) < 1e-10
        # equivalently prod_{k=1..3} Gamma(k/3) = 2 pi 3^(-1/2)
        prod = math.gamma(1 / 3) * math.gamma(2 / 3) * math.gamma(1.0)
        assert abs(prod - 2.0 * math.pi / math.sqrt(3.0)) < 1e-12

    def test_complex_point(self):
        assert gauss_multiplication_defect(0.3 + 0.7j, 5) < 1e-10

    @pytest.mark.parametrize("m", [2, 3, 5, 7])
    def test_defect_small_on_grid(self, m):
        for s in (0.3 + 0.7j, 1.0 + 0j, 2.5 - 1.2j, 0.9 + 3.0j, 1.7 - 0.4j):
            assert gauss_multiplication_defect(s, m) < 1e-10


class TestEvalOptions:
    def test_defaults_valid(self):
        opts = EvalOptions()
        assert opts.gamma2_cutoff >= 64 and opts.rel_tol > 0

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"rel_tol": 0.0},
            {"rel_tol": -1e-9},
            {"gamma2_cutoff": 32},
            {"euler_max_trace": 2},
        ],
    )
    def test_rejections(self, kwargs):
        with pytest.raises(ValueError):
            EvalOptions(**kwargs)

"""Rayleigh sums: log-derivative extraction, closed forms, Euler-Rayleigh bounds."""

import math
from fractions import Fraction

import pytest

from coulomb_radii import CoulombParams
from coulomb_radii.radii import RadiusQuery, radius_univalence
from coulomb_radii.rayleigh import (
    Family,
    SumMethod,
    euler_rayleigh_bounds,
    logderiv_coeffs,
    sums,
)

GRID_L = (-0.4, 0.0, 0.5, 1.0, 2.5)
GRID_ETA = (-2.0, -1.0, -0.25, 0.0)


def brute_force_logderiv(c, m_max):
    # oracle: long-division of exact rational polynomials, P'(z)/P(z)
    c = [Fraction(x).limit_denominator(10**12) for x in c]
    deriv = [(k + 1) * c[k + 1] for k in range(len(c) - 1)]
    t = []
    rem = deriv[:]
    for k in range(m_max + 1):
        tk = rem[k]
        for j in range(k + 1, len(rem)):
            rem[j] -= tk * c[j - k]
        t.append(float(tk))
    return t


class TestLogderivCoeffs:
    def test_cosine_series(self):
        cos_c = [1.0, 0.0, -0.5, 0.0, 1.0 / 24.0, 0.0]
        t = logderiv_coeffs(cos_c, 3)
        assert t == pytest.approx([0.0, -1.0, 0.0, -1.0 / 3.0], abs=1e-15)

    def test_sinc_series(self):
        sinc = [1.0, 0.0, -1.0 / 6.0, 0.0, 1.0 / 120.0]
        t = logderiv_coeffs(sinc, 1)
        # S_2 over zeros +-n pi is 2 zeta(2)/pi^2 = 1/3 = -t_1
        assert t[1] == pytest.approx(-1.0 / 3.0, abs=1e-15)

    def test_theta_sequence_hand_convolution(self):
        # (L=0, eta=-1): c = (n+1) a_n = [1, -2, 1/2, 2/9, -5/72]
        c = [1.0, -2.0, 0.5, 2.0 / 9.0, -5.0 / 72.0]
        t = logderiv_coeffs(c, 2)
        assert t[0] == pytest.approx(-2.0, abs=1e-15)
        assert t[1] == pytest.approx(-3.0, abs=1e-15)
        assert t[2] == pytest.approx(-13.0 / 3.0, abs=1e-14)

    def test_matches_polynomial_long_division(self):
        c = [1.0, -0.7, 0.31, 0.05, -0.02, 0.004, 0.001, -0.0002]
        assert logderiv_coeffs(c, 5) == pytest.approx(
            brute_force_logderiv(c, 5), rel=1e-12
        )

    def test_requires_unit_constant_term(self):
        with pytest.raises(ValueError):
            logderiv_coeffs([2.0, 1.0, 1.0], 1)


class TestSums:
    def test_extracted_sigma_at_0_minus1(self):
        s = sums(CoulombParams(0.0, -1.0), Family.SIGMA, SumMethod.EXTRACTED, 4)
        assert s.values[2] == pytest.approx(3.0, abs=1e-13)
        assert s.values[3] == pytest.approx(13.0 / 3.0, abs=1e-13)

    def test_closed_form_sigma_at_0_minus1_is_flagged(self):
        s = sums(CoulombParams(0.0, -1.0), Family.SIGMA, SumMethod.CLOSED_FORM, 3)
        assert s.values[2] == pytest.approx(3.0, abs=1e-13)
        # the printed cubic evaluates to 6 here; extraction gives 13/3
        assert s.values[3] == pytest.approx(6.0, abs=1e-12)
        assert 3 in s.discrepancies and 2 not in s.discrepancies

    def test_varsigma_cosine_sum(self):
        # zeros of cos: sum of 1/xi^2 = (8/pi^2) sum (2n-1)^{-2} = 1
        for method in SumMethod:
            s = sums(CoulombParams(0.0, 0.0), Family.VARSIGMA, method, 3)
            assert s.values[2] == pytest.approx(1.0, abs=1e-13)

    @pytest.mark.parametrize("L", GRID_L)
    @pytest.mark.parametrize("eta", GRID_ETA)
    def test_order_two_closed_forms_match_extraction(self, L, eta):
        params = CoulombParams(L, eta)
        for family in Family:
            closed = sums(params, family, SumMethod.CLOSED_FORM, 2).values[2]
            extracted = sums(params, family, SumMethod.EXTRACTED, 2).values[2]
            assert abs(closed - extracted) <= 1e-10 * abs(extracted)

    def test_extraction_self_consistency(self):
        # S_m from m_max and from 2 m_max coefficients agree
        params = CoulombParams(0.5, -1.0)
        a = sums(params, Family.SIGMA, SumMethod.EXTRACTED, 8).values
        b = sums(params, Family.SIGMA, SumMethod.EXTRACTED, 16).values
        for m in range(2, 9):
            assert a[m] == pytest.approx(b[m], rel=1e-12, abs=1e-12)

    def test_odd_sums_vanish_at_eta_zero(self):
        s = sums(CoulombParams(1.5, 0.0), Family.SIGMA, SumMethod.EXTRACTED, 8)
        assert s.values[3] == 0.0
        assert s.values[5] == 0.0
        assert s.values[7] == 0.0

    def test_closed_form_beyond_three_unsupported(self):
        with pytest.raises(ValueError):
            sums(CoulombParams(0.0, -1.0), Family.SIGMA, SumMethod.CLOSED_FORM, 4)

    def test_zero_sum_identity_against_refined_zeros(self):
        # S_2 equals the partial sum over refined zeros plus a tail below the
        # analytic correction bound 1/(s x_N) per side (s = min observed gap)
        from coulomb_radii.zeros import ZeroTarget, find_zeros

        params = CoulombParams(0.0, -1.0)
        zs = find_zeros(params, ZeroTarget.F_PRIME, 12, 12)
        assert len(zs.positive) >= 10 and len(zs.negative) >= 10
        partial = sum(x**-2 for x in zs.positive) + sum(y**-2 for y in zs.negative)
        gaps_pos = [b - a for a, b in zip(zs.positive, zs.positive[1:])]
        gaps_neg = [a - b for a, b in zip(zs.negative, zs.negative[1:])]
        tail_bound = 1.0 / (min(gaps_pos) * zs.positive[-1]) + 1.0 / (
            min(gaps_neg) * -zs.negative[-1]
        )
        s2 = sums(params, Family.SIGMA, SumMethod.EXTRACTED, 2).values[2]
        assert abs(s2 - partial) <= tail_bound


class TestBounds:
    def test_eta_zero_upper_undefined(self):
        lower, upper = euler_rayleigh_bounds(CoulombParams(0.0, 0.0), "g", 2)
        assert lower == pytest.approx(1.0, abs=1e-13)
        assert upper is None

    @pytest.mark.parametrize("L", [0.0, 1.0, 2.5])
    def test_eta_zero_lower_closed_form(self, L):
        # the printed g-bound reduces to sqrt((2L+3)/3) at eta = 0
        lower, upper = euler_rayleigh_bounds(CoulombParams(L, 0.0), "g", 2)
        assert lower == pytest.approx(math.sqrt((2.0 * L + 3.0) / 3.0), rel=1e-12)
        assert upper is None

    def test_f_bounds_at_0_minus1(self):
        lower, upper = euler_rayleigh_bounds(CoulombParams(0.0, -1.0), "f", 2)
        assert lower == pytest.approx(3.0 ** -0.5, rel=1e-12)
        assert upper == pytest.approx(9.0 / 13.0, rel=1e-12)

    @pytest.mark.parametrize("L", GRID_L)
    @pytest.mark.parametrize("eta", (-2.0, -1.0, -0.25))
    def test_bracketing_on_grid(self, L, eta):
        params = CoulombParams(L, eta)
        for kind in ("f", "g"):
            lower, upper = euler_rayleigh_bounds(params, kind, 2)
            runiv = radius_univalence(params, kind).value
            assert upper is not None
            assert lower < runiv - 1e-12
            assert runiv < upper - 1e-12
            lower4, _ = euler_rayleigh_bounds(params, kind, 4)
            assert lower4 >= lower - 1e-12

    def test_odd_m_rejected(self):
        with pytest.raises(ValueError):
            euler_rayleigh_bounds(CoulombParams(0.0, -1.0), "f", 3)

    def test_closed_form_method_gives_printed_bounds(self):
        params = CoulombParams(0.0, -1.0)
        lower, upper = euler_rayleigh_bounds(
            params, "f", 2, method=SumMethod.CLOSED_FORM
        )
        assert lower == pytest.approx(3.0 ** -0.5, rel=1e-12)
        # printed sigma_3 is 6 here, so the printed upper is 1/2
        assert upper == pytest.approx(0.5, rel=1e-12)

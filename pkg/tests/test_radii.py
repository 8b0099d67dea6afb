"""Radius solvers: starlikeness, convexity, univalence."""

import math

import pytest

from coulomb_radii import CoulombDomainError, CoulombParams
from coulomb_radii.radii import (
    Kind,
    RadiusProperty,
    RadiusQuery,
    radius,
    radius_convex,
    radius_starlike,
    radius_univalence,
)

P00 = CoulombParams(0.0, 0.0)

GRID = [
    CoulombParams(L, eta)
    for L in (-0.4, 0.0, 0.5, 1.0, 2.5)
    for eta in (-2.0, -1.0, -0.25, 0.0)
]


def bisect(f, lo, hi, iters=100):
    flo = f(lo)
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        if flo * f(mid) <= 0.0:
            hi = mid
        else:
            lo = mid
            flo = f(lo)
    return 0.5 * (lo + hi)


class TestStarlike:
    def test_sine_beta_zero_both_kinds(self):
        for kind in ("g", "f"):
            res = radius_starlike(RadiusQuery(P00, kind, "starlike", 0.0))
            assert res.value == pytest.approx(math.pi / 2.0, abs=1e-10)

    def test_sine_beta_half(self):
        # oracle: independent bisection on r cot r = 1/2
        oracle = bisect(lambda r: r * math.cos(r) / math.sin(r) - 0.5, 1.0, 1.5)
        res = radius_starlike(RadiusQuery(P00, "g", "starlike", 0.5))
        assert res.value == pytest.approx(oracle, abs=1e-10)
        assert res.value == pytest.approx(1.16556118520721, abs=1e-9)

    def test_result_diagnostics(self):
        res = radius_starlike(RadiusQuery(P00, "g", "starlike", 0.25))
        lo, hi = res.bracket
        assert lo < res.value < hi
        assert abs(res.residual) <= 1e-10
        assert res.value < res.domain_cap
        assert res.domain_cap == pytest.approx(math.pi, abs=1e-9)
        assert res.iterations > 0


class TestConvex:
    def test_sine_beta_zero_both_kinds(self):
        oracle = bisect(lambda r: r * math.tan(r) - 1.0, 0.5, 1.2)
        for kind in ("g", "f"):
            res = radius_convex(RadiusQuery(P00, kind, "convex", 0.0))
            assert res.value == pytest.approx(oracle, abs=1e-10)
            assert res.value == pytest.approx(0.8603335890, abs=1e-9)

    def test_sine_beta_half(self):
        oracle = bisect(lambda r: r * math.tan(r) - 0.5, 0.3, 1.0)
        res = radius_convex(RadiusQuery(P00, "g", "convex", 0.5))
        assert res.value == pytest.approx(oracle, abs=1e-10)

    def test_f_requires_L_above_minus_half(self):
        with pytest.raises(CoulombDomainError):
            radius_convex(RadiusQuery(CoulombParams(-0.7, -1.0), "f", "convex", 0.0))


class TestUnivalence:
    def test_sine_is_pi_half(self):
        for kind in ("g", "f"):
            res = radius_univalence(P00, kind)
            assert res.value == pytest.approx(math.pi / 2.0, abs=1e-10)
            assert "univalent" in res.flags

    def test_f_eta_minus_one_inside_rayleigh_bracket(self):
        res = radius_univalence(CoulombParams(0.0, -1.0), "f")
        assert 3.0 ** -0.5 < res.value < 9.0 / 13.0


class TestProperties:
    @pytest.mark.parametrize("params", GRID, ids=lambda p: f"L{p.L}_eta{p.eta}")
    def test_convex_below_starlike(self, params):
        for kind in ("g", "f"):
            star = radius_starlike(RadiusQuery(params, kind, "starlike", 0.0))
            conv = radius_convex(RadiusQuery(params, kind, "convex", 0.0))
            assert conv.value <= star.value + 1e-12

    def test_monotone_in_beta(self):
        for params in (P00, CoulombParams(1.0, -1.0), CoulombParams(-0.4, -0.25)):
            for prop, solver in (("starlike", radius_starlike), ("convex", radius_convex)):
                values = [
                    solver(RadiusQuery(params, "g", prop, b)).value
                    for b in (0.0, 0.25, 0.5, 0.75)
                ]
                assert all(a > b for a, b in zip(values, values[1:]))

    @pytest.mark.parametrize(
        "params",
        [CoulombParams(0.0, -1.0), CoulombParams(2.5, -2.0), CoulombParams(-0.4, -0.25)],
        ids=lambda p: f"L{p.L}_eta{p.eta}",
    )
    def test_ratio_and_direct_forms_agree(self, params):
        for kind in ("g", "f"):
            for prop in ("starlike", "convex"):
                for beta in (0.0, 0.5):
                    q = RadiusQuery(params, kind, prop, beta)
                    a = radius(q, form="ratio").value
                    b = radius(q, form="direct").value
                    assert abs(a - b) <= 1e-10 * abs(a)

    def test_univalence_equals_starlike_at_beta_zero(self):
        params = CoulombParams(1.0, -1.0)
        for kind in ("g", "f"):
            st = radius_starlike(RadiusQuery(params, kind, "starlike", 0.0))
            un = radius_univalence(params, kind)
            assert un.value == pytest.approx(st.value, abs=1e-11)


class TestUnsafe:
    def test_region_violation_requires_unsafe(self):
        with pytest.raises(CoulombDomainError):
            CoulombParams(0.0, 0.5)

    def test_unsafe_result_carries_no_certificate(self):
        params = CoulombParams(0.0, 0.1, unsafe=True)
        res = radius_starlike(RadiusQuery(params, "g", "starlike", 0.0))
        assert "no-certificate" in res.flags
        assert res.value > 0.0

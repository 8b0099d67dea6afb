"""Acceptance matrix: the checks behind the ``verify`` CLI subcommand.

Every check is oracle- or property-based at desk scale.  Oracles here are
deliberately independent of the series pipeline: elementary-function
bisection (sin, cos, tan), the ascending Bessel series, hand-derived
rational values, and analytic zero lists.  One check (printed versus
extracted order-3 Rayleigh sums) verifies a documented discrepancy: it
passes when the disagreement is present and annotated, since the printed
cubic is the odd one out against both extraction and the intermediate
convolution identities.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Callable

from .params import CoulombParams
from .radii import RadiusQuery, radius, radius_convex, radius_starlike, radius_univalence
from .rayleigh import Family, SumMethod, euler_rayleigh_bounds, sums
from .series import bessel_j, conv_ratio, eval_point, star_ratio
from .subordination import axis_minimum_gap, disk_min_real
from .zeros import ZeroTarget, find_zeros, interlacing_check, product_eval, symmetric_zero_set

GRID_L = (-0.4, 0.0, 0.5, 1.0, 2.5)
GRID_ETA = (-2.0, -1.0, -0.25, 0.0)


@dataclass(frozen=True)
class CriterionResult:
    number: int
    name: str
    passed: bool
    details: str
    flagged: tuple[str, ...] = field(default_factory=tuple)


def _oracle_bisect(f: Callable[[float], float], lo: float, hi: float, iters: int = 100) -> float:
    flo = f(lo)
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        if flo * f(mid) <= 0.0:
            hi = mid
        else:
            lo = mid
            flo = f(lo)
    return 0.5 * (lo + hi)


def _grid(eta_filter: Callable[[float], bool] = lambda e: True) -> list[CoulombParams]:
    return [
        CoulombParams(L, eta)
        for L in GRID_L
        for eta in GRID_ETA
        if eta_filter(eta)
    ]


def _sine_collapse() -> CriterionResult:
    p00 = CoulombParams(0.0, 0.0)
    worst = 0.0
    zs = find_zeros(p00, ZeroTarget.F, 10, 0)
    for n, x in enumerate(zs.positive, start=1):
        worst = max(worst, abs(x - n * math.pi))
    ok = len(zs.positive) == 10 and worst <= 1e-10

    star_g = radius_starlike(RadiusQuery(p00, "g", "starlike", 0.0)).value
    star_f = radius_starlike(RadiusQuery(p00, "f", "starlike", 0.0)).value
    ok &= abs(star_g - math.pi / 2.0) <= 1e-10
    ok &= abs(star_f - math.pi / 2.0) <= 1e-10

    conv_oracle = _oracle_bisect(lambda r: r * math.tan(r) - 1.0, 0.5, 1.2)
    conv_g = radius_convex(RadiusQuery(p00, "g", "convex", 0.0)).value
    ok &= abs(conv_g - conv_oracle) <= 1e-9
    ok &= abs(conv_g - 0.8603335890) <= 1e-9
    return CriterionResult(
        1, "sine collapse at (L=0, eta=0)", bool(ok),
        f"max zero error {worst:.2e}; r*={star_g:.12f} (pi/2 {math.pi / 2:.12f}); "
        f"r^c={conv_g:.12f} vs oracle {conv_oracle:.12f}",
    )


def _bessel_cross_validation() -> CriterionResult:
    brackets = {0.5: (3.0, 4.5), 1.0: (4.0, 5.2), 1.5: (4.7, 5.9)}
    worst_zero = 0.0
    worst_rel = 0.0
    for L, (lo, hi) in brackets.items():
        params = CoulombParams(L, 0.0)
        nu = L + 0.5
        oracle = _oracle_bisect(lambda x: bessel_j(nu, x), lo, hi)
        found = find_zeros(params, ZeroTarget.F, 1, 0).positive[0]
        worst_zero = max(worst_zero, abs(found - oracle))
        c_inv = 2.0 ** (L + 1.0) * math.exp(math.lgamma(L + 1.5)) / math.sqrt(math.pi)
        for k in range(1, 31):
            z = 0.1 * k
            lhs = z * eval_point(params, z).p0
            rhs = c_inv * z ** (-L) * math.sqrt(math.pi * z / 2.0) * bessel_j(nu, z)
            worst_rel = max(worst_rel, abs(lhs - rhs) / abs(rhs))
    ok = worst_zero <= 1e-9 and worst_rel <= 1e-10
    return CriterionResult(
        2, "Bessel cross-validation at eta=0", ok,
        f"max first-zero gap {worst_zero:.2e}; max series-vs-Bessel rel {worst_rel:.2e}",
    )


def _closed_form_agreement() -> CriterionResult:
    worst = 0.0
    for params in _grid():
        for family in Family:
            closed = sums(params, family, SumMethod.CLOSED_FORM, 2).values[2]
            extracted = sums(params, family, SumMethod.EXTRACTED, 2).values[2]
            worst = max(worst, abs(closed - extracted) / abs(extracted))
    ok = worst <= 1e-10
    return CriterionResult(
        3, "order-2 closed forms match extraction on the grid", ok,
        f"max relative disagreement {worst:.2e}",
    )


def _documented_discrepancy() -> CriterionResult:
    params = CoulombParams(0.0, -1.0)
    closed = sums(params, Family.SIGMA, SumMethod.CLOSED_FORM, 3)
    extracted = sums(params, Family.SIGMA, SumMethod.EXTRACTED, 3)
    printed_ok = abs(closed.values[3] - 6.0) <= 1e-12
    extracted_ok = abs(extracted.values[3] - 13.0 / 3.0) <= 1e-13
    annotated = 3 in closed.discrepancies
    ok = printed_ok and extracted_ok and annotated
    return CriterionResult(
        4, "order-3 printed/extracted discrepancy at (L=0, eta=-1)", ok,
        f"printed {closed.values[3]:.12g}, extracted {extracted.values[3]:.12g}; "
        "expected, flagged, and not a failure of the extraction path",
        flagged=(closed.discrepancies.get(3, ""),) if annotated else (),
    )


def _bound_bracketing() -> CriterionResult:
    worst_slack = math.inf
    details = []
    ok = True
    for params in _grid(lambda e: e < 0.0):
        for kind in ("f", "g"):
            lower, upper = euler_rayleigh_bounds(params, kind, 2)
            runiv = radius_univalence(params, kind).value
            if upper is None:
                ok = False
                details.append(f"upper undefined at (L={params.L}, eta={params.eta}, {kind})")
                continue
            slack = min(runiv - lower, upper - runiv)
            worst_slack = min(worst_slack, slack)
            if not (lower < runiv - 1e-12 and runiv < upper - 1e-12):
                ok = False
                details.append(f"bracket fails at (L={params.L}, eta={params.eta}, {kind})")
            lower4, _ = euler_rayleigh_bounds(params, kind, 4)
            if lower4 < lower - 1e-12:
                ok = False
                details.append(f"m=4 lower below m=2 at (L={params.L}, eta={params.eta}, {kind})")
    return CriterionResult(
        5, "Euler-Rayleigh m=2 brackets the univalence radius (eta<0 grid)", ok,
        "; ".join(details) if details else f"min slack {worst_slack:.3e}",
    )


def _eta_zero_bound_identity() -> CriterionResult:
    worst = 0.0
    uppers_ok = True
    for L in (0.0, 1.0, 2.5):
        lower, upper = euler_rayleigh_bounds(CoulombParams(L, 0.0), "g", 2)
        simplified = math.sqrt((2.0 * L + 3.0) / 3.0)
        worst = max(worst, abs(lower - simplified))
        uppers_ok &= upper is None
    ok = worst <= 1e-12 and uppers_ok
    return CriterionResult(
        6, "eta=0 lower bound simplifies to sqrt((2L+3)/3), upper undefined", ok,
        f"max |lower - sqrt((2L+3)/3)| = {worst:.2e}; "
        f"uppers undefined: {uppers_ok}",
    )


def _interlacing() -> CriterionResult:
    ok = True
    failures = []
    for L in (0.0, 0.5, 1.0):
        for eta in (-1.0, 0.0):
            params = CoulombParams(L, eta)
            report = interlacing_check(
                find_zeros(params, ZeroTarget.F, 4, 4),
                find_zeros(params, ZeroTarget.F_PRIME, 4, 4),
            )
            if not (report.ok and report.pairs_checked >= 4):
                ok = False
                failures.append(f"(L={L}, eta={eta})")
    return CriterionResult(
        7, "zeros of F and F' interlace (4 pairs, both signs)", ok,
        "failures: " + ", ".join(failures) if failures else "all 6 parameter pairs interlace",
    )


def _monotone_ratios() -> CriterionResult:
    ok = True
    failures = []
    for params in _grid():
        caps = {
            "star": find_zeros(params, ZeroTarget.F, 1, 1),
            "conv_g": find_zeros(params, ZeroTarget.G_PRIME, 1, 1),
            "conv_f": find_zeros(params, ZeroTarget.F_PRIME, 1, 1),
        }
        cap_of = {k: min(z.positive[0], -z.negative[0]) for k, z in caps.items()}
        checks = [
            ("star", lambda r: star_ratio(params, "g", r)),
            ("star", lambda r: star_ratio(params, "f", r)),
            ("conv_g", lambda r: conv_ratio(params, "g", r)),
            ("conv_f", lambda r: conv_ratio(params, "f", r)),
        ]
        for cap_key, fn in checks:
            cap = cap_of[cap_key]
            values = [fn(cap * i / 65.0) for i in range(1, 65)]
            if not all(a > b for a, b in zip(values, values[1:])):
                ok = False
                failures.append(f"(L={params.L}, eta={params.eta}, {cap_key})")
    return CriterionResult(
        8, "star and convexity ratios strictly decrease on (0, cap)", ok,
        "failures: " + ", ".join(failures) if failures else
        "64-point sampling decreases for all 20 grid parameters",
    )


def _gap_property_suite() -> CriterionResult:
    rng = random.Random(1898)
    worst = math.inf
    for _ in range(10_000):
        b = rng.uniform(0.2, 3.0)
        a = b + rng.uniform(1e-6, 3.0)
        lam = rng.random()
        radius_frac = math.sqrt(rng.random()) * 0.999
        theta = rng.uniform(0.0, 2.0 * math.pi)
        z = b * radius_frac * complex(math.cos(theta), math.sin(theta))
        sign = 1 if rng.random() < 0.5 else -1
        worst = min(worst, axis_minimum_gap(lam, a, b, z, sign))
    axis_worst = 0.0
    for _ in range(500):
        b = rng.uniform(0.2, 3.0)
        a = b + rng.uniform(1e-6, 3.0)
        lam = rng.random()
        m = b * rng.random() * 0.999
        # equality point of each bracket sign: z = |z| for minus, z = -|z| for plus
        axis_worst = max(axis_worst, abs(axis_minimum_gap(lam, a, b, m, -1)))
        axis_worst = max(axis_worst, abs(axis_minimum_gap(lam, a, b, -m, 1)))
    ok = worst >= -1e-12 and axis_worst <= 1e-12
    return CriterionResult(
        9, "axis-minimum gap nonnegative over 10^4 random tuples", ok,
        f"min gap {worst:.3e}; max |gap| at the equality axis point {axis_worst:.3e}",
    )


def _disk_positivity() -> CriterionResult:
    ming = disk_min_real(4 + 1j, 0.5, "g", 64, 0.99)
    minq = disk_min_real(4 + 1j, 0.5, "zgpg", 64, 0.99)
    minq_sine = disk_min_real(0j, 0j, "zgpg", 64, 0.99)
    ok = ming > 0.0 and minq > 0.0 and minq_sine > 0.0
    return CriterionResult(
        10, "unit-disk grid positivity for region parameters", ok,
        f"(L=4+i, eta=0.5): min Re g/z = {ming:.4f}, min Re zg'/g = {minq:.4f}; "
        f"(L=0, eta=0): min Re zg'/g = {minq_sine:.4f}",
    )


def _product_vs_series() -> CriterionResult:
    p00 = CoulombParams(0.0, 0.0)
    zs = symmetric_zero_set(p00, [n * math.pi for n in range(1, 801)])
    errs = {}
    for K in (100, 200, 400, 800):
        value, _ = product_eval(zs, p00, 1.0, K)
        errs[K] = abs(value - math.sin(1.0)) / math.sin(1.0)
    contraction_ok = all(
        errs[2 * K] <= 0.75 * errs[K] for K in (100, 200, 400)
    )
    ok = errs[100] <= 2.1e-3 and contraction_ok
    return CriterionResult(
        11, "truncated product reproduces sin(1), contracting in K", ok,
        f"rel err K=100: {errs[100]:.3e} (bound 2.1e-3); "
        f"ratios {errs[200] / errs[100]:.3f}, {errs[400] / errs[200]:.3f}, "
        f"{errs[800] / errs[400]:.3f} (need <= 0.75)",
    )


def _equation_form_equivalence() -> CriterionResult:
    ok = True
    worst = 0.0
    failures = []
    for params in _grid():
        for kind in ("g", "f"):
            for prop in ("starlike", "convex"):
                for beta in (0.0, 0.5):
                    q = RadiusQuery(params, kind, prop, beta)
                    a = radius(q, form="ratio").value
                    b = radius(q, form="direct").value
                    rel = abs(a - b) / abs(a)
                    worst = max(worst, rel)
                    if rel > 1e-10:
                        ok = False
                        failures.append(
                            f"(L={params.L}, eta={params.eta}, {kind}, {prop}, beta={beta})"
                        )
    return CriterionResult(
        12, "ratio-form and direct-form radii agree", ok,
        "failures: " + ", ".join(failures) if failures else
        f"max relative gap {worst:.2e} over grid x kind x property x beta",
    )


_CRITERIA: tuple[Callable[[], CriterionResult], ...] = (
    _sine_collapse,
    _bessel_cross_validation,
    _closed_form_agreement,
    _documented_discrepancy,
    _bound_bracketing,
    _eta_zero_bound_identity,
    _interlacing,
    _monotone_ratios,
    _gap_property_suite,
    _disk_positivity,
    _product_vs_series,
    _equation_form_equivalence,
)


def run_criterion(number: int) -> CriterionResult:
    if not 1 <= number <= len(_CRITERIA):
        raise ValueError(f"criterion number must be 1..{len(_CRITERIA)}")
    return _CRITERIA[number - 1]()


def run_all(numbers: list[int] | None = None) -> list[CriterionResult]:
    picks = numbers if numbers is not None else range(1, len(_CRITERIA) + 1)
    return [run_criterion(n) for n in picks]


def criterion_count() -> int:
    return len(_CRITERIA)

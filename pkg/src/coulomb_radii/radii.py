"""Radii of starlikeness, convexity and univalence of the normalized forms.

For L > -1, eta <= 0 each defining ratio decreases strictly from 1 at the
origin to -inf at the first positive zero of the relevant denominator, so a
sign-change bracket plus plain bisection is a certified solver; no derivative
iteration is used anywhere.  The equations, written on the series factor P:

    starlike, kind g:  r g'/g = beta            <=>  r P' + (1-beta) P = 0
    starlike, kind f:  r g'/g = beta(L+1) - L   <=>  r P' + (1-beta)(L+1) P = 0
    convex,   kind g:  1 + r g''/g' = beta      <=>  r^2 P'' + (3-beta) r P' + (1-beta) P = 0
    convex,   kind f:  1 + r F''/F' - (L/(L+1)) r F'/F = beta
                       <=>  (L+1) A [D + (1-beta) B] - L B^2 = 0,
                       A = P, B = (L+1)P + rP', D = L(L+1)P + 2(L+1)rP' + r^2 P''

Each solver can run either on the decreasing ratio ("ratio" form) or on the
polynomial combination above ("direct" form); the two roots agreeing is one
of the acceptance checks.  The univalence radius is the starlikeness radius
at beta = 0 and is resolved through the zero finder on the matching
derivative target.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Callable

from .errors import CoulombDomainError, MonotonicityError, PoleError
from .params import CoulombParams
from .series import DEFAULT_TOL, SeriesEvaluator, SeriesValue
from .zeros import ZeroTarget, find_zeros, first_positive_zero

_ABSCISSA_TOL = 1e-13
_BISECT_CAP = 200


class Kind(str, Enum):
    F = "f"
    G = "g"


class RadiusProperty(str, Enum):
    STARLIKE = "starlike"
    CONVEX = "convex"
    UNIVALENT = "univalent"


@dataclass(frozen=True)
class RadiusQuery:
    params: CoulombParams
    kind: Kind
    property: RadiusProperty
    beta: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind(self.kind))
        object.__setattr__(self, "property", RadiusProperty(self.property))
        beta = float(self.beta)
        if self.property is RadiusProperty.UNIVALENT:
            beta = 0.0
        if not 0.0 <= beta < 1.0:
            raise ValueError("beta must lie in [0, 1)")
        object.__setattr__(self, "beta", beta)


@dataclass(frozen=True)
class RadiusResult:
    value: float
    bracket: tuple[float, float]
    residual: float
    domain_cap: float
    iterations: int
    flags: tuple[str, ...] = field(default_factory=tuple)


def _ratio_star(ev: SeriesEvaluator, r: float) -> float:
    sv: SeriesValue = ev.eval(r)
    scale = max(abs(r * sv.p1), 1e-30)
    if abs(sv.p0) <= max(1e-12 * scale, sv.noise[0]):
        raise PoleError(f"P(r)=0 within tolerance at r={r:.12g}")
    return 1.0 + r * sv.p1 / sv.p0


def _ratio_conv_g(ev: SeriesEvaluator, r: float) -> float:
    sv = ev.eval(r)
    den = sv.p0 + r * sv.p1
    num = r * (2.0 * sv.p1 + r * sv.p2)
    if abs(den) <= max(1e-12 * max(abs(num), 1e-30), sv.noise[0] + r * sv.noise[1]):
        raise PoleError(f"g'(r)=0 within tolerance at r={r:.12g}")
    return 1.0 + num / den


def _ratio_conv_f(ev: SeriesEvaluator, r: float) -> float:
    sv = ev.eval(r)
    L = ev.params.L
    a_val = sv.p0
    b_val = (L + 1.0) * sv.p0 + r * sv.p1
    d_val = L * (L + 1.0) * sv.p0 + 2.0 * (L + 1.0) * r * sv.p1 + r * r * sv.p2
    noise_b = (abs(L) + 1.0) * sv.noise[0] + r * sv.noise[1]
    if abs(b_val) <= max(1e-12 * max(abs(d_val), 1e-30), noise_b):
        raise PoleError(f"F'(r)=0 within tolerance at r={r:.12g}")
    if abs(a_val) <= max(1e-12 * max(abs(b_val), 1e-30), sv.noise[0]):
        raise PoleError(f"F(r)=0 within tolerance at r={r:.12g}")
    return 1.0 + d_val / b_val - (L / (L + 1.0)) * (b_val / a_val)


def _direct_star(ev: SeriesEvaluator, r: float, beta: float, kind: Kind) -> float:
    sv = ev.eval(r)
    fac = (1.0 - beta) * (ev.params.L + 1.0) if kind is Kind.F else (1.0 - beta)
    return r * sv.p1 + fac * sv.p0


def _direct_conv_g(ev: SeriesEvaluator, r: float, beta: float) -> float:
    sv = ev.eval(r)
    return r * r * sv.p2 + (3.0 - beta) * r * sv.p1 + (1.0 - beta) * sv.p0


def _direct_conv_f(ev: SeriesEvaluator, r: float, beta: float) -> float:
    sv = ev.eval(r)
    L = ev.params.L
    a_val = sv.p0
    b_val = (L + 1.0) * sv.p0 + r * sv.p1
    d_val = L * (L + 1.0) * sv.p0 + 2.0 * (L + 1.0) * r * sv.p1 + r * r * sv.p2
    return (L + 1.0) * a_val * (d_val + (1.0 - beta) * b_val) - L * b_val * b_val


def _domain_cap(params: CoulombParams, target: ZeroTarget) -> tuple[float, float]:
    """(positive-side singularity, min-modulus cap over both signs)."""
    zs = find_zeros(params, target, 1, 1)
    if not zs.positive or not zs.negative:
        raise MonotonicityError(
            f"could not locate the first zeros of {target.value} for "
            f"(L={params.L}, eta={params.eta})"
        )
    pos = zs.positive[0]
    return pos, min(pos, -zs.negative[0])


def _bisect_decreasing(fn: Callable[[float], float], level: float, pos_cap: float,
                       certified: bool) -> tuple[float, tuple[float, float], int]:
    """Root of fn(r) = level on (0, pos_cap) for fn decreasing from 1 to -inf."""
    lo = min(0.5, pos_cap / 4.0)
    probes: list[tuple[float, float]] = []

    def sample(r: float) -> float:
        try:
            v = fn(r)
        except PoleError:
            return -math.inf  # at/past the cap: counts as the low side
        probes.append((r, v))
        return v

    f_lo = sample(lo)
    while f_lo <= level:
        lo *= 0.5
        if lo < 1e-300:
            raise MonotonicityError("no left endpoint with ratio above the level")
        f_lo = sample(lo)
    hi = None
    for k in range(1, 64):
        cand = pos_cap - (pos_cap - lo) * 0.5**k
        if sample(cand) < level:
            hi = cand
            break
    if hi is None:
        raise MonotonicityError("no right endpoint with ratio below the level")
    if not certified:
        # the decrease is proven only for eta <= 0; under unsafe parameters we
        # verify it on the probes instead of assuming
        probes.sort()
        for (r1, v1), (r2, v2) in zip(probes, probes[1:]):
            if v2 > v1 + 1e-9 * max(1.0, abs(v1)):
                raise MonotonicityError(
                    f"ratio increases between r={r1:.6g} and r={r2:.6g}; "
                    "bisection is not certified for these parameters"
                )
    iters = 0
    while hi - lo > _ABSCISSA_TOL * max(1.0, hi) and iters < _BISECT_CAP:
        mid = 0.5 * (lo + hi)
        try:
            f_mid = fn(mid)
        except PoleError:
            f_mid = -math.inf
        if f_mid < level:
            hi = mid
        else:
            lo = mid
        iters += 1
    return 0.5 * (lo + hi), (lo, hi), iters


def _solve(query: RadiusQuery, form: str) -> RadiusResult:
    params = query.params
    kind = query.kind
    beta = query.beta
    certified = params.in_certified_region
    if query.property is RadiusProperty.CONVEX and kind is Kind.F:
        if not params.supports_f_convexity():
            if not params.unsafe:
                raise CoulombDomainError(
                    "convexity of the f-form requires L > -1/2 and eta <= 0"
                )
            certified = False

    if query.property is RadiusProperty.CONVEX:
        cap_target = ZeroTarget.G_PRIME if kind is Kind.G else ZeroTarget.F_PRIME
    else:
        cap_target = ZeroTarget.F
    pos_cap, domain_cap = _domain_cap(params, cap_target)

    ev = SeriesEvaluator(params, DEFAULT_TOL)
    flags: list[str] = []
    if not certified:
        flags.append("no-certificate")

    if query.property is RadiusProperty.CONVEX:
        level = beta
        if form == "ratio":
            fn = (lambda r: _ratio_conv_g(ev, r)) if kind is Kind.G else (
                lambda r: _ratio_conv_f(ev, r))
        else:
            fn = (lambda r: _direct_conv_g(ev, r, beta)) if kind is Kind.G else (
                lambda r: _direct_conv_f(ev, r, beta))
            level = 0.0
    else:
        level = beta if kind is Kind.G else beta * (params.L + 1.0) - params.L
        if form == "ratio":
            if beta == 0.0:
                # delegate to the zero finder on the matching derivative target
                tgt = ZeroTarget.G_PRIME if kind is Kind.G else ZeroTarget.F_PRIME
                ref = first_positive_zero(params, tgt)
                residual = _ratio_star(ev, ref.root) - level
                return RadiusResult(
                    value=ref.root,
                    bracket=(ref.lo, ref.hi),
                    residual=residual,
                    domain_cap=domain_cap,
                    iterations=ref.iterations,
                    flags=tuple(flags),
                )
            fn = lambda r: _ratio_star(ev, r)
        else:
            fn = lambda r: _direct_star(ev, r, beta, kind)
            level = 0.0

    value, bracket, iters = _bisect_decreasing(fn, level, pos_cap, certified)
    residual = fn(value) - level
    return RadiusResult(
        value=value,
        bracket=bracket,
        residual=residual,
        domain_cap=domain_cap,
        iterations=iters,
        flags=tuple(flags),
    )


def _check_form(form: str) -> str:
    if form not in ("ratio", "direct"):
        raise ValueError("form must be 'ratio' or 'direct'")
    return form


def radius_starlike(query: RadiusQuery, *, form: str = "ratio") -> RadiusResult:
    """Radius of starlikeness of order beta (smallest positive root of the
    starlike equation).  form='direct' solves the polynomial combination of
    P, P', P'' instead of the log-derivative ratio."""
    if query.property is RadiusProperty.CONVEX:
        raise ValueError("query.property must be starlike or univalent")
    return _solve(query, _check_form(form))


def radius_convex(query: RadiusQuery, *, form: str = "ratio") -> RadiusResult:
    """Radius of convexity of order beta."""
    if query.property is not RadiusProperty.CONVEX:
        query = replace(query, property=RadiusProperty.CONVEX)
    return _solve(query, _check_form(form))


def radius_univalence(params: CoulombParams, kind: Kind | str) -> RadiusResult:
    """Radius of univalence: the starlikeness radius at beta = 0."""
    query = RadiusQuery(params, Kind(kind), RadiusProperty.UNIVALENT, 0.0)
    result = _solve(query, "ratio")
    return replace(result, flags=result.flags + ("univalent",))


def radius(query: RadiusQuery, *, form: str = "ratio") -> RadiusResult:
    """Dispatch on query.property."""
    if query.property is RadiusProperty.CONVEX:
        return radius_convex(query, form=form)
    if query.property is RadiusProperty.UNIVALENT:
        result = radius_starlike(query, form=form)
        return replace(result, flags=result.flags + ("univalent",))
    return radius_starlike(query, form=form)

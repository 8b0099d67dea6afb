"""Real-zero localization for F, F' and g', plus interlacing and the
truncated Weierstrass product.

Targets are reduced to the series factor P (see series module):

    F        -> P(z)                 (the nontrivial zeros; z = 0 excluded)
    F_prime  -> (L+1) P(z) + z P'(z)
    g_prime  -> P(z) + z P'(z)

Zeros are swept with a fixed step (Coulomb zeros are asymptotically ~pi
apart, so pi/8 cannot skip any at desk scale), bracketed by sign change, and
refined by plain bisection; no derivative iteration anywhere.  The negative
axis reuses the same code path through the reflected function z -> P(-z).

The scan horizon is the smaller of the requested one and the abscissa where
the evaluator's cancellation-noise floor makes sign changes unresolvable;
running past it would report garbage zeros, so the result is flagged
truncated instead.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable

from .errors import ConvergenceError, DegenerateZeroError
from .params import CoulombParams
from .series import DEFAULT_TOL, SeriesEvaluator, SeriesValue

DEFAULT_REFINE_TOL = 1e-12
DEFAULT_SCAN_STEP = math.pi / 8.0
_BISECT_CAP = 80


class ZeroTarget(str, Enum):
    F = "F"
    F_PRIME = "F_prime"
    G_PRIME = "g_prime"


@dataclass(frozen=True)
class ZeroSet:
    """Refined real zeros of one target, split by sign.

    positive is strictly increasing; negative is strictly decreasing (all
    values < 0, moduli increasing).  truncated marks a partial result: the
    requested count was not reachable within the scan horizon.
    """

    params: CoulombParams
    target: ZeroTarget
    positive: tuple[float, ...]
    negative: tuple[float, ...]
    refine_tol: float
    truncated: bool = False


@dataclass(frozen=True)
class InterlacingReport:
    ok: bool
    positive_ok: bool
    negative_ok: bool
    pairs_checked: int

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class _Refined:
    root: float
    lo: float
    hi: float
    iterations: int
    residual: float


def _target_fn(ev: SeriesEvaluator, target: ZeroTarget) -> Callable[[float], tuple[float, float]]:
    L = ev.params.L

    def h(z: float) -> tuple[float, float]:
        sv: SeriesValue = ev.eval(z)
        if target is ZeroTarget.F:
            return sv.p0, sv.noise[0]
        if target is ZeroTarget.F_PRIME:
            val = (L + 1.0) * sv.p0 + z * sv.p1
            noise = (abs(L) + 1.0) * sv.noise[0] + abs(z) * sv.noise[1]
            return val, noise
        val = sv.p0 + z * sv.p1
        noise = sv.noise[0] + abs(z) * sv.noise[1]
        return val, noise

    return h


def _target_derivative(ev: SeriesEvaluator, target: ZeroTarget, z: float) -> float:
    sv = ev.eval(z)
    L = ev.params.L
    if target is ZeroTarget.F:
        return sv.p1
    if target is ZeroTarget.F_PRIME:
        return (L + 2.0) * sv.p1 + z * sv.p2
    return 2.0 * sv.p1 + z * sv.p2


def _value_at_origin(params: CoulombParams, target: ZeroTarget) -> float:
    # P(0) = 1, F'-target at 0 is L+1, g'(0) = 1
    if target is ZeroTarget.F_PRIME:
        return params.L + 1.0
    return 1.0


def refine_bracket(fn: Callable[[float], tuple[float, float]], lo: float, hi: float,
                   f_lo: float, refine_tol: float) -> _Refined:
    """Bisection on a sign-change bracket, capped at 80 iterations."""
    iters = 0
    while hi - lo > refine_tol and iters < _BISECT_CAP:
        mid = 0.5 * (lo + hi)
        f_mid, _ = fn(mid)
        if f_lo * f_mid <= 0.0:
            hi = mid
        else:
            lo = mid
            f_lo = f_mid
        iters += 1
    root = 0.5 * (lo + hi)
    resid, _ = fn(root)
    return _Refined(root=root, lo=lo, hi=hi, iterations=iters, residual=resid)


def _scan_one_sign(ev: SeriesEvaluator, target: ZeroTarget, sign: float, count: int,
                   refine_tol: float, scan_step: float) -> tuple[list[float], bool]:
    if count <= 0:
        return [], False
    horizon = max(20.0, 1.5 * count * math.pi)
    base = _target_fn(ev, target)

    def h(t: float) -> tuple[float, float]:
        return base(sign * t)

    found: list[float] = []
    t_prev = 0.0
    f_prev = _value_at_origin(ev.params, target)
    t = scan_step
    truncated = False
    while len(found) < count:
        if t > horizon * (1.0 + 1e-12):
            truncated = True
            break
        try:
            val, noise = h(t)
        except ConvergenceError:
            truncated = True
            break
        if abs(val) <= 8.0 * noise and noise > 1e-14:
            # sign no longer resolvable against the cancellation floor
            truncated = True
            break
        if val == 0.0:
            # grid point sits exactly on a (simple) zero; the sign flips there
            found.append(t)
            val = -f_prev
        elif (f_prev < 0.0) != (val < 0.0):
            ref = refine_bracket(h, t_prev, t, f_prev, refine_tol)
            deriv = _target_derivative(ev, target, sign * ref.root) * sign
            if abs(deriv) < 1e-9 and abs(ref.residual) < 1e-9:
                raise DegenerateZeroError(
                    f"target and derivative both vanish near {sign * ref.root:.12g}"
                )
            found.append(ref.root)
        t_prev, f_prev = t, val
        t += scan_step
    return found, truncated


def find_zeros(params: CoulombParams, target: ZeroTarget | str, count_pos: int,
               count_neg: int, *, refine_tol: float = DEFAULT_REFINE_TOL,
               scan_step: float = DEFAULT_SCAN_STEP, tol: float = DEFAULT_TOL,
               n_max: int | None = None) -> ZeroSet:
    """First count_pos positive and count_neg negative zeros, none skipped.

    Bisection-refined to refine_tol on the abscissa.  If a requested count is
    not reachable within the scan horizon (or the evaluator's precision
    horizon), the partial result carries truncated=True.
    """
    target = ZeroTarget(target)
    if count_pos < 0 or count_neg < 0:
        raise ValueError("zero counts must be >= 0")
    ev = SeriesEvaluator(params, tol, n_max)
    pos, trunc_pos = _scan_one_sign(ev, target, +1.0, count_pos, refine_tol, scan_step)
    neg_mod, trunc_neg = _scan_one_sign(ev, target, -1.0, count_neg, refine_tol, scan_step)
    return ZeroSet(
        params=params,
        target=target,
        positive=tuple(pos),
        negative=tuple(-m for m in neg_mod),
        refine_tol=refine_tol,
        truncated=trunc_pos or trunc_neg,
    )


def first_positive_zero(params: CoulombParams, target: ZeroTarget | str, *,
                        refine_tol: float = DEFAULT_REFINE_TOL,
                        tol: float = DEFAULT_TOL) -> _Refined:
    """First positive zero with its final bracket (used by the radius solvers)."""
    target = ZeroTarget(target)
    ev = SeriesEvaluator(params, tol)
    base = _target_fn(ev, target)
    t_prev = 0.0
    f_prev = _value_at_origin(params, target)
    t = DEFAULT_SCAN_STEP
    while t <= 400.0:
        val, _noise = base(t)
        if val == 0.0:
            return _Refined(root=t, lo=t - refine_tol, hi=t + refine_tol,
                            iterations=0, residual=0.0)
        if (f_prev < 0.0) != (val < 0.0):
            return refine_bracket(base, t_prev, t, f_prev, refine_tol)
        t_prev, f_prev = t, val
        t += DEFAULT_SCAN_STEP
    raise ConvergenceError(f"no positive zero of {target.value} found in scan range")


def interlacing_check(zf: ZeroSet, zfp: ZeroSet) -> InterlacingReport:
    """x'_1 < x_1 < x'_2 < x_2 < ... and the mirrored chain on the negative side.

    Requires both sets from identical params with L > -1/2, targets F and
    F_prime, and at least two zeros per side in each set.
    """
    if zf.params != zfp.params:
        raise ValueError("interlacing_check requires identical params")
    if zf.target is not ZeroTarget.F or zfp.target is not ZeroTarget.F_PRIME:
        raise ValueError("interlacing_check expects targets (F, F_prime)")
    if zf.params.L <= -0.5:
        raise ValueError("interlacing holds for L > -1/2 only")
    if min(len(zf.positive), len(zfp.positive), len(zf.negative), len(zfp.negative)) < 2:
        raise ValueError("need at least 2 zeros per side on both targets")

    def chain(x: tuple[float, ...], xp: tuple[float, ...]) -> tuple[bool, int]:
        n = min(len(x), len(xp))
        ok = all(xp[i] < x[i] for i in range(n)) and all(
            x[i] < xp[i + 1] for i in range(n - 1)
        )
        return ok, n

    pos_ok, n_pos = chain(zf.positive, zfp.positive)
    neg_ok, n_neg = chain(
        tuple(-y for y in zf.negative), tuple(-y for y in zfp.negative)
    )
    return InterlacingReport(
        ok=pos_ok and neg_ok,
        positive_ok=pos_ok,
        negative_ok=neg_ok,
        pairs_checked=min(n_pos, n_neg),
    )


def product_eval(zero_set: ZeroSet, params: CoulombParams, z: float, K: int) -> tuple[float, int]:
    """Truncated C-free Weierstrass product for g:

        z e^{eta z/(L+1)} prod_{n<=K} (1 - z/rho_n) e^{z/rho_n}

    over the first K zeros on each sign list.  Returns (value, pairs_used).
    """
    if zero_set.target is not ZeroTarget.F:
        raise ValueError("product_eval needs zeros of F")
    if zero_set.params != params:
        raise ValueError("params do not match the zero set")
    if K < 0 or K > len(zero_set.positive) or K > len(zero_set.negative):
        raise ValueError(f"need K={K} zeros available on each side")
    value = z * math.exp(params.eta * z / (params.L + 1.0))
    for n in range(K):
        x = zero_set.positive[n]
        y = zero_set.negative[n]
        value *= (1.0 - z / x) * math.exp(z / x)
        value *= (1.0 - z / y) * math.exp(z / y)
    return value, K


def symmetric_zero_set(params: CoulombParams, abscissas: list[float] | tuple[float, ...],
                       refine_tol: float = DEFAULT_REFINE_TOL) -> ZeroSet:
    """ZeroSet of F built from known positive abscissas mirrored to z < 0.

    Only meaningful at eta = 0 where the zeros are symmetric; lets analytic
    zero lists (e.g. n pi for L = 0) feed product_eval beyond the range the
    series evaluator can certify.
    """
    if params.eta != 0.0:
        raise ValueError("symmetric zero sets require eta = 0")
    pos = tuple(sorted(float(x) for x in abscissas))
    return ZeroSet(
        params=params,
        target=ZeroTarget.F,
        positive=pos,
        negative=tuple(-x for x in pos),
        refine_tol=refine_tol,
    )

"""Series core for the regular Coulomb wave function.

Everything in this package is reduced to the entire series factor

    P(z) = sum_{n>=0} a_n z^n,   a_0 = 1,  a_1 = eta/(L+1),
    n(n+2L+1) a_n = 2 eta a_{n-1} - a_{n-2},

so that F(z) = C_L(eta) z^{L+1} P(z).  The wave function itself is never
evaluated with the z^{L+1} prefactor (fractional powers for non-integer L);
derivative combinations are rewritten via

    F  = C z^{L+1} P
    F' = C z^L     [(L+1) P + z P']
    F''= C z^{L-1} [L(L+1) P + 2(L+1) z P' + z^2 P'']

and the normalization constant C cancels from every ratio used downstream.

Evaluation runs on double-double pairs (see _ddouble): the series alternates
and the largest term grows like e^|z| while the value stays O(1), so plain
doubles lose the low digits long before the tenth zero.  The truncation rule
stops once three consecutive terms are negligible against each partial sum
and a geometric-majorant tail bound, derived from the two-term recurrence,
sits below the requested tolerance.  Beyond |z| ~ 55 even the pair format
cannot certify results (noise floor eps_dd * sum|terms|) and evaluation
refuses rather than degrade silently.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from . import _ddouble as dd
from .errors import (
    ConvergenceError,
    CoulombDomainError,
    DegenerateRecurrenceError,
    PoleError,
)
from .params import CoulombParams

DEFAULT_N_MAX = 256
N_MAX_CAP = 4096
DEFAULT_TOL = 1e-12
EVAL_Z_MAX = 55.0

_EPS = 2.220446049250313e-16
_TINY = 1e-306
_NOISE_SAFETY = 4.0


@dataclass(frozen=True)
class CoefficientTable:
    """Truncated coefficient sequence a_0..a_{n_max} for fixed (L, eta).

    ``a`` is the double-rounded view; the double-double pairs used for
    evaluation are kept alongside so no accuracy is lost on re-evaluation.
    """

    params: CoulombParams
    n_max: int
    a: tuple[float, ...]
    a_pairs: tuple[tuple[float, float], ...]


def coefficients(params: CoulombParams, n_max: int) -> CoefficientTable:
    """Generate a_0..a_{n_max} from the two-term recurrence.

    Raises DegenerateRecurrenceError if n(n+2L+1) vanishes for some index
    (reachable only for unsafe L <= -3/2) and CoulombDomainError at L = -1.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    L, eta = params.L, params.eta
    if L == -1.0:
        raise CoulombDomainError("coefficient recurrence requires L != -1")
    pairs = [(1.0, 0.0)]
    pairs.append(dd.div(dd.from_float(eta), dd.two_sum(L, 1.0)))
    two_eta = 2.0 * eta
    two_L = 2.0 * L
    for n in range(2, n_max + 1):
        den = dd.mul_d(dd.two_sum(two_L, n + 1.0), float(n))
        if den[0] == 0.0 or abs(n + two_L + 1.0) < 1e-14:
            raise DegenerateRecurrenceError(n, L)
        num = dd.sub(dd.mul_d(pairs[n - 1], two_eta), pairs[n - 2])
        pairs.append(dd.div(num, den))
    return CoefficientTable(
        params=params,
        n_max=n_max,
        a=tuple(p[0] + p[1] for p in pairs),
        a_pairs=tuple(pairs),
    )


def complex_coefficients(L: complex, eta: complex, n_max: int) -> tuple[complex, ...]:
    """Same recurrence with complex parameters, in plain complex arithmetic.

    Used for unit-disk checks where |z| < 1 keeps the sum well conditioned.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    if L == -1:
        raise CoulombDomainError("coefficient recurrence requires L != -1")
    a = [1.0 + 0j, complex(eta) / (complex(L) + 1.0)]
    for n in range(2, n_max + 1):
        den = n * (n + 2.0 * complex(L) + 1.0)
        if abs(den) < 1e-14:
            raise DegenerateRecurrenceError(n, L)  # type: ignore[arg-type]
        a.append((2.0 * complex(eta) * a[n - 1] - a[n - 2]) / den)
    return tuple(a)


@dataclass(frozen=True)
class SeriesValue:
    """P, P' and P'' at one point, with truncation and noise accounting.

    tail_estimate bounds the magnitude of the discarded tail of the P sum
    (geometric majorant from the recurrence); noise holds the cancellation
    floor eps_dd * sum|terms| of each of the three sums.
    """

    p0: float
    p1: float
    p2: float
    truncation_terms: int
    tail_estimate: float
    noise: tuple[float, float, float]


def eval_series(table: CoefficientTable, z: float, tol: float = DEFAULT_TOL) -> SeriesValue:
    """Sum P, P', P'' at real z with compensated (double-double) arithmetic."""
    z = float(z)
    if not math.isfinite(z):
        raise ValueError("z must be finite")
    if abs(z) > EVAL_Z_MAX:
        raise ConvergenceError(
            f"|z|={abs(z):.3g} is beyond the double-double evaluation range "
            f"(~{EVAL_Z_MAX:g}); cancellation noise would swamp the result"
        )
    L, eta = table.params.L, table.params.eta
    az = abs(z)
    pairs = table.a_pairs

    s0 = (0.0, 0.0)
    s1 = (0.0, 0.0)
    s2 = (0.0, 0.0)
    g0 = g1 = g2 = 0.0
    t0m = t1m = t2m = 0.0
    zn = (1.0, 0.0)
    znm1 = (0.0, 0.0)
    znm2 = (0.0, 0.0)
    run = 0

    n_used = table.n_max + 1
    converged = False
    for n in range(table.n_max + 1):
        an = pairs[n]
        t0 = dd.mul(an, zn)
        s0 = dd.add(s0, t0)
        t0m = abs(t0[0])
        g0 += t0m
        if n >= 1:
            t1 = dd.mul_d(dd.mul(an, znm1), float(n))
            s1 = dd.add(s1, t1)
            t1m = abs(t1[0])
            g1 += t1m
        if n >= 2:
            t2 = dd.mul_d(dd.mul(an, znm2), float(n * (n - 1)))
            s2 = dd.add(s2, t2)
            t2m = abs(t2[0])
            g2 += t2m

        small = (
            t0m <= _EPS * abs(s0[0]) + dd.EPS * g0 + _TINY
            and (n < 1 or t1m <= _EPS * abs(s1[0]) + dd.EPS * g1 + _TINY)
            and (n < 2 or t2m <= _EPS * abs(s2[0]) + dd.EPS * g2 + _TINY)
        )
        run = run + 1 if small else 0
        if run >= 3 and n >= 4:
            q = az * (2.0 * abs(eta) + max(1.0, az)) / ((n + 1.0) * (n + 2.0 * L + 2.0))
            if 0.0 <= q < 0.9:
                qa = q * (n + 3.0) / (n + 1.0)  # covers the derivative sums too
                fac = qa / (1.0 - qa)
                tails = (t0m * fac, t1m * fac, t2m * fac)
                ok = all(
                    tails[k] <= max(tol * abs(s[0]), 0.25 * _NOISE_SAFETY * dd.EPS * g, _TINY)
                    for k, (s, g) in enumerate(((s0, g0), (s1, g1), (s2, g2)))
                )
                if ok:
                    n_used = n + 1
                    tail0 = tails[0]
                    converged = True
                    break
        znm2 = znm1
        znm1 = zn
        zn = dd.mul_d(zn, z)

    if not converged:
        raise ConvergenceError(
            f"tail bound not achieved within n_max={table.n_max} at z={z:.6g}; "
            "regenerate the table with a larger n_max"
        )
    return SeriesValue(
        p0=dd.to_float(s0),
        p1=dd.to_float(s1),
        p2=dd.to_float(s2),
        truncation_terms=n_used,
        tail_estimate=tail0,
        noise=(
            _NOISE_SAFETY * dd.EPS * g0,
            _NOISE_SAFETY * dd.EPS * g1,
            _NOISE_SAFETY * dd.EPS * g2,
        ),
    )


class SeriesEvaluator:
    """Reusable point evaluator that regrows its table on demand.

    Holds the only mutable state in this module (the cached table), so share
    one instance per thread only; the module-level functions construct their
    own and stay pure.
    """

    def __init__(self, params: CoulombParams, tol: float = DEFAULT_TOL,
                 n_max: int | None = None):
        self.params = params
        self.tol = tol
        self._table = coefficients(params, n_max or DEFAULT_N_MAX)

    @property
    def table(self) -> CoefficientTable:
        return self._table

    def eval(self, z: float) -> SeriesValue:
        if abs(z) > EVAL_Z_MAX:
            raise ConvergenceError(
                f"|z|={abs(z):.3g} is beyond the double-double evaluation range "
                f"(~{EVAL_Z_MAX:g})"
            )
        while True:
            try:
                return eval_series(self._table, z, self.tol)
            except ConvergenceError:
                n = self._table.n_max
                if n >= N_MAX_CAP:
                    raise
                self._table = coefficients(self.params, min(2 * n, N_MAX_CAP))


def eval_point(params: CoulombParams, z: float, tol: float = DEFAULT_TOL,
               n_max: int | None = None) -> SeriesValue:
    """One-shot evaluation with automatic table doubling up to the cap."""
    return SeriesEvaluator(params, tol, n_max).eval(z)


def _check_kind(kind: str) -> str:
    if kind not in ("f", "g"):
        raise ValueError(f"kind must be 'f' or 'g', got {kind!r}")
    return kind


def _star_from_values(L: float, kind: str, r: float, sv: SeriesValue) -> float:
    scale = max(abs(r * sv.p1), 1e-30)
    if abs(sv.p0) <= max(1e-12 * scale, sv.noise[0]):
        raise PoleError(f"P(r)=0 within tolerance at r={r:.12g} (at/past a zero of F)")
    ratio_g = 1.0 + r * sv.p1 / sv.p0
    if kind == "g":
        return ratio_g
    return (L + ratio_g) / (L + 1.0)


def star_ratio(params: CoulombParams, kind: str, r: float, *,
               tol: float = DEFAULT_TOL, n_max: int | None = None) -> float:
    """r g'(r)/g(r) for kind 'g'; (1/(L+1)) r F'(r)/F(r) for kind 'f'.

    Both tend to 1 as r -> 0+ and decrease to -inf at the first positive zero
    of g (eta <= 0).  Raises PoleError when P(r) vanishes within tolerance.
    """
    _check_kind(kind)
    if not (r > 0.0 and math.isfinite(r)):
        raise ValueError("r must be positive and finite")
    sv = eval_point(params, r, tol, n_max)
    return _star_from_values(params.L, kind, r, sv)


def _conv_from_values(L: float, kind: str, r: float, sv: SeriesValue) -> float:
    p0, p1, p2 = sv.p0, sv.p1, sv.p2
    if kind == "g":
        den = p0 + r * p1  # g'(r)
        num = r * (2.0 * p1 + r * p2)  # r g''(r)
        if abs(den) <= max(1e-12 * max(abs(num), 1e-30), sv.noise[0] + r * sv.noise[1]):
            raise PoleError(f"g'(r)=0 within tolerance at r={r:.12g}")
        return 1.0 + num / den
    a_val = p0
    b_val = (L + 1.0) * p0 + r * p1  # F'/(C z^L)
    d_val = L * (L + 1.0) * p0 + 2.0 * (L + 1.0) * r * p1 + r * r * p2
    noise_b = (abs(L) + 1.0) * sv.noise[0] + r * sv.noise[1]
    if abs(b_val) <= max(1e-12 * max(abs(d_val), 1e-30), noise_b):
        raise PoleError(f"F'(r)=0 within tolerance at r={r:.12g}")
    if abs(a_val) <= max(1e-12 * max(abs(b_val), 1e-30), sv.noise[0]):
        raise PoleError(f"F(r)=0 within tolerance at r={r:.12g}")
    return 1.0 + d_val / b_val - (L / (L + 1.0)) * (b_val / a_val)


def conv_ratio(params: CoulombParams, kind: str, r: float, *,
               tol: float = DEFAULT_TOL, n_max: int | None = None) -> float:
    """1 + r g''/g' for kind 'g'; 1 + r F''/F' - (L/(L+1)) r F'/F for kind 'f'.

    The f-form is certified only for L > -1/2 (unsafe params may override).
    """
    _check_kind(kind)
    if not (r > 0.0 and math.isfinite(r)):
        raise ValueError("r must be positive and finite")
    if kind == "f" and params.L <= -0.5 and not params.unsafe:
        raise CoulombDomainError("conv_ratio kind 'f' requires L > -1/2")
    sv = eval_point(params, r, tol, n_max)
    return _conv_from_values(params.L, kind, r, sv)


# --- normalization constant -------------------------------------------------

# Lanczos approximation, g = 607/128 with 15 coefficients (Godfrey's set);
# relative error below 1e-13 on Re z > 0, which is all this package needs.
_LANCZOS_G = 4.7421875
_LANCZOS_C = (
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
)


def lngamma_complex(z: complex) -> complex:
    """log Gamma on Re z > 0 via the Lanczos sum."""
    z = complex(z)
    if z.real <= 0.0:
        raise ValueError("lngamma_complex requires Re z > 0")
    acc = _LANCZOS_C[0]
    for k in range(1, len(_LANCZOS_C)):
        acc += _LANCZOS_C[k] / (z - 1.0 + k)
    t = z + (_LANCZOS_G - 0.5)
    return 0.5 * math.log(2.0 * math.pi) + (z - 0.5) * cmath.log(t) - t + cmath.log(acc)


def normalization_constant(L: float, eta: float) -> float:
    """C_L(eta) = 2^L e^{-pi eta/2} |Gamma(L+1+i eta)| / Gamma(2L+2).

    Integer L uses the finite-product form; non-integer L goes through the
    complex log-gamma magnitude.  Only used for display and cross-checks: the
    constant cancels in every radius equation.
    """
    L = float(L)
    eta = float(eta)
    if not L > -1.0:
        raise CoulombDomainError("normalization_constant requires L > -1")
    if L.is_integer():
        Li = int(L)
        if eta == 0.0:
            return 2.0**Li * math.factorial(Li) / math.factorial(2 * Li + 1)
        prod = 1.0
        for k in range(Li + 1):
            prod *= k * k + eta * eta
        # eta*(e^{2 pi eta}-1) > 0 for all real eta != 0
        return (2.0**Li / math.factorial(2 * Li + 1)) * math.sqrt(
            2.0 * math.pi * prod / (eta * math.expm1(2.0 * math.pi * eta))
        )
    re_lg = lngamma_complex(complex(L + 1.0, eta)).real
    return math.exp(
        L * math.log(2.0) - math.pi * eta / 2.0 + re_lg - math.lgamma(2.0 * L + 2.0)
    )


# --- Bessel oracle ----------------------------------------------------------

def bessel_j(nu: float, x: float, *, tol: float = 1e-14) -> float:
    """Ascending-series Bessel function of the first kind (oracle path).

    Independent of the Coulomb series code: used to cross-check the eta = 0
    collapse F_{L,0}(z) = sqrt(pi z/2) J_{L+1/2}(z).  Accurate in plain
    doubles for the desk-scale arguments (x <~ 10) exercised here.
    """
    nu = float(nu)
    x = float(x)
    if not nu > -1.0:
        raise ValueError("bessel_j requires nu > -1")
    if x < 0.0:
        raise ValueError("bessel_j requires x >= 0")
    if x == 0.0:
        if nu == 0.0:
            return 1.0
        if nu > 0.0:
            return 0.0
        raise ValueError("x = 0 diverges for nu < 0")
    term = math.exp(nu * math.log(0.5 * x) - math.lgamma(nu + 1.0))
    q = 0.25 * x * x
    s = term
    comp = 0.0  # Neumaier compensation
    run = 0
    for k in range(400):
        term = -term * q / ((k + 1.0) * (k + 1.0 + nu))
        t = s + term
        if abs(s) >= abs(term):
            comp += (s - t) + term
        else:
            comp += (term - t) + s
        s = t
        ratio = q / ((k + 2.0) * (k + 2.0 + nu))
        if abs(term) <= _EPS * abs(s) + _TINY:
            run += 1
            if run >= 3 and ratio < 0.9:
                if abs(term) * ratio / (1.0 - ratio) <= max(tol * abs(s), _TINY):
                    return s + comp
        else:
            run = 0
    raise ConvergenceError(f"bessel_j series did not converge at nu={nu}, x={x}")

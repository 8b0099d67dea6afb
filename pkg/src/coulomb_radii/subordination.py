"""Complex-parameter region predicates and unit-disk positivity evidence.

Two printed condition sets on complex (L, eta) are evaluated exactly as
stated, without harmonizing their asymmetric hypotheses:

  * positivity set:  Re L >= 1/2,  Im L >= 1,  (1 + Im L + |eta|)^2 <= (Re L - 1/2)^2
  * starlike set:    |eta| <= Re L - (Im L)^2 / 3 - 1/4

The disk scan is numerical evidence, not a certificate: it samples a polar
grid of the unit disk (boundary-heavy, since minima of harmonic functions sit
on the boundary) and reports the minimum real part of either g(z)/z or
z g'(z)/g(z).  The g-quantity is the normalized value g(z)/z = P(z), the
function fixed to 1 at the center whose positive real part the parameter
region controls; the raw g vanishes at the origin, so its real part has no
positivity to check.

axis_minimum_gap exposes, for property testing, the inequality that a
weighted two-pole real-part combination is minimized on the positive real
axis of each circle |z| = const.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping

import numpy as np

from .series import complex_coefficients


@dataclass(frozen=True)
class RegionReport:
    re_positive_ok: bool
    starlike_ok: bool
    margins: Mapping[str, float]


def region_check(L: complex, eta: complex) -> RegionReport:
    """Evaluate both printed inequality sets with their slack."""
    L = complex(L)
    eta = complex(eta)
    abs_eta = abs(eta)
    margins = {
        "re_part": L.real - 0.5,
        "im_part": L.imag - 1.0,
        "disk_gap": (L.real - 0.5) ** 2 - (1.0 + L.imag + abs_eta) ** 2,
        "starlike_gap": L.real - L.imag**2 / 3.0 - 0.25 - abs_eta,
    }
    re_ok = margins["re_part"] >= 0.0 and margins["im_part"] >= 0.0 and margins["disk_gap"] >= 0.0
    return RegionReport(
        re_positive_ok=re_ok,
        starlike_ok=margins["starlike_gap"] >= 0.0,
        margins=MappingProxyType(margins),
    )


def _coeffs_for_disk(L: complex, eta: complex) -> np.ndarray:
    # grow until the tail at |z| = 1 is negligible; the factorial-type decay
    # of the recurrence makes this converge for any finite parameters
    n = 48
    while True:
        a = complex_coefficients(L, eta, n)
        if abs(a[-1]) + abs(a[-2]) < 1e-20:
            return np.asarray(a, dtype=complex)
        if n >= 1024:
            return np.asarray(a, dtype=complex)
        n *= 2


def disk_min_real(L: complex, eta: complex, quantity: str, grid_n: int = 64,
                  radius_cap: float = 0.99) -> float:
    """Minimum real part of g(z)/z ('g') or z g'(z)/g(z) ('zgpg') on a polar
    grid of the disk |z| <= radius_cap.

    Rings at radii (k/grid_n) radius_cap, angles 2 pi j/(4 grid_n).  A
    positive result is grid evidence of the theorem's conclusion, not a
    proof.  Returns -inf if the quantity hits a pole on the grid.
    """
    if quantity not in ("g", "zgpg"):
        raise ValueError("quantity must be 'g' or 'zgpg'")
    if grid_n < 16:
        raise ValueError("grid_n must be >= 16")
    if not 0.0 < radius_cap < 1.0:
        raise ValueError("radius_cap must lie in (0, 1)")
    a = _coeffs_for_disk(complex(L), complex(eta))

    radii = radius_cap * np.arange(1, grid_n + 1) / grid_n
    angles = 2.0 * np.pi * np.arange(4 * grid_n) / (4.0 * grid_n)
    z = (radii[:, None] * np.exp(1j * angles)[None, :]).ravel()

    p = np.zeros_like(z)
    dp = np.zeros_like(z)
    for c in a[::-1]:
        dp = dp * z + p
        p = p * z + c

    if quantity == "g":
        vals = np.real(p)
    else:
        with np.errstate(divide="ignore", invalid="ignore"):
            vals = np.real(1.0 + z * dp / p)
        if not np.all(np.isfinite(vals)):
            return -math.inf
    return float(np.min(vals))


def axis_minimum_gap(lam: float, a: float, b: float, z: complex, sign: int) -> float:
    """Signed gap of the two-pole minimum inequality

        lam Re[z^2/(a(a+s z))] - Re[z^2/(b(b+s z))]
            >= lam |z|^2/(a(a-|z|)) - |z|^2/(b(b-|z|)),   s = sign,

    for lam in [0,1], a > b > 0, |z| < b.  The right side is the left side
    evaluated at z = -s |z|, the point of each circle |z| = const where the
    combination is smallest; equality holds exactly there (z = |z| for the
    minus bracket, z = -|z| for the plus bracket).  The two bracket signs map
    onto each other under z -> -z, which is why the reference value always
    carries the (. - |z|) denominators: resolving the printed inequality with
    the plus sign on both sides fails near z = -|z| (the b-pole side).
    """
    lam = float(lam)
    a = float(a)
    b = float(b)
    z = complex(z)
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if not 0.0 <= lam <= 1.0:
        raise ValueError("lam must lie in [0, 1]")
    if not a > b > 0.0:
        raise ValueError("requires a > b > 0")
    m = abs(z)
    if not m < b:
        raise ValueError("requires |z| < b")
    lhs = lam * (z * z / (a * (a + sign * z))).real - (z * z / (b * (b + sign * z))).real
    rhs = lam * m * m / (a * (a - m)) - m * m / (b * (b - m))
    return lhs - rhs

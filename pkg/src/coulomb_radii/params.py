"""Parameter pair (L, eta) for the regular Coulomb wave function.

The radius results of this package are certified only on L > -1, eta <= 0
(convexity of the f-form additionally needs L > -1/2, checked at the solver).
Values outside that region can be constructed, but only with an explicit
``unsafe`` marker, and everything downstream then carries a no-certificate
flag.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import CoulombDomainError


@dataclass(frozen=True)
class CoulombParams:
    """Order L and Sommerfeld parameter eta, both real."""

    L: float
    eta: float
    unsafe: bool = False

    def __post_init__(self):
        object.__setattr__(self, "L", float(self.L))
        object.__setattr__(self, "eta", float(self.eta))
        if not (math.isfinite(self.L) and math.isfinite(self.eta)):
            raise CoulombDomainError("L and eta must be finite")
        if not self.unsafe and not self.in_certified_region:
            raise CoulombDomainError(
                f"(L={self.L}, eta={self.eta}) is outside the certified region "
                "L > -1, eta <= 0; construct with unsafe=True to override"
            )

    @property
    def in_certified_region(self) -> bool:
        return self.L > -1.0 and self.eta <= 0.0

    def supports_f_convexity(self) -> bool:
        # the f-form convexity equation is certified only for L > -1/2
        return self.L > -0.5 and self.eta <= 0.0

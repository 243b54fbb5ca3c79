"""Floating-point evaluation of truncated series on the upper half-plane and
residual checks of the T and S transformation laws.

These are numerical witnesses, not proofs: a truncated expansion is summed at
q = exp(2*pi*i*tau) and compared against its transform, with a heuristic tail
bound G*|q|^T/(1-|q|) (G the largest stored |coefficient|).  The bound is
meaningful for the lacunary, slowly-growing series checked here on the test
region Im tau >= 0.8, where |q| < 0.007.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from .qseries import FracPowerSeries

__all__ = ["TauPoint", "ModularResidual", "eval_series", "check_T", "check_S"]

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class TauPoint:
    """A point of the upper half-plane."""

    re: float
    im: float

    def __post_init__(self):
        if not self.im > 0:
            raise ValueError(f"tau must lie in the upper half-plane (im = {self.im})")

    @property
    def z(self) -> complex:
        return complex(self.re, self.im)


@dataclass(frozen=True)
class ModularResidual:
    transformation: str  # "S" or "T"
    weight: Fraction
    residual: float
    tail_bound: float

    def to_json_dict(self, series: str, tau: TauPoint) -> dict:
        return {
            "series": series,
            "transform": self.transformation,
            "weight": [self.weight.numerator, self.weight.denominator],
            "tau": [tau.re, tau.im],
            "residual": self.residual,
            "tail_bound": self.tail_bound,
        }


def eval_series(s: FracPowerSeries, tau: TauPoint) -> Tuple[complex, float]:
    """Sum of the stored terms at q = exp(2*pi*i*tau), with a tail bound.

    Fractional powers are principal: q^e = exp(2*pi*i*tau*e).  The tail
    bound covers exponents at and beyond the truncation, assuming
    coefficients stay within the largest magnitude seen so far.
    """
    z = tau.z
    value = 0j
    gmax = 0.0
    for e, c in s.terms():
        value += float(c) * cmath.exp(TWO_PI * 1j * z * float(e.value))
        gmax = max(gmax, abs(float(c)))
    qabs = math.exp(-TWO_PI * tau.im)
    tail = max(1.0, gmax) * qabs ** float(s.truncation) / (1.0 - qabs)
    return value, tail


def check_T(s: FracPowerSeries, weight: Fraction, tau: TauPoint) -> ModularResidual:
    """Residual of f(tau + 1) = mu * f(tau).

    The multiplier mu = exp(2*pi*i*e0) is forced by the lowest exponent e0:
    an expansion supported on e0 + Z picks up exactly that phase under
    tau -> tau + 1.  The weight factor is trivial here (c=0, d=1).
    """
    low = s.lowest()
    mu = cmath.exp(TWO_PI * 1j * float(low)) if low is not None else 1.0
    v1, t1 = eval_series(s, TauPoint(tau.re + 1.0, tau.im))
    v0, t0 = eval_series(s, tau)
    return ModularResidual("T", Fraction(weight), abs(v1 - mu * v0), t1 + t0)


def check_S(s: FracPowerSeries, weight: Fraction, tau: TauPoint,
            multiplier: complex) -> ModularResidual:
    """Residual of f(-1/tau) = multiplier * (-i*tau)^weight * f(tau).

    (-i*tau)^weight uses the principal branch.  tau is restricted to the
    standard position Re in (-1/2, 1/2], Im >= 0.8 so that both tau and
    -1/tau keep |q| small and the truncation tails negligible.
    """
    if not (-0.5 < tau.re <= 0.5 and tau.im >= 0.8):
        raise ValueError(
            "S-check requires tau in the standard-position region "
            f"Re in (-1/2, 1/2], Im >= 0.8 (got {tau.re} + {tau.im}i)")
    z = tau.z
    w = -1.0 / z
    factor = complex(multiplier) * cmath.exp(float(weight) * cmath.log(-1j * z))
    v1, t1 = eval_series(s, TauPoint(w.real, w.imag))
    v0, t0 = eval_series(s, tau)
    residual = abs(v1 - factor * v0)
    return ModularResidual("S", Fraction(weight), residual, t1 + abs(factor) * t0)

"""Structure constants of the neutral free fermion and Ramond superalgebras.

Two Lie superalgebras on integer mode grids:

* the free fermion span of psi_n (odd) and a unit 1 (even) with
  [psi_m, psi_n] = delta_{m,-n} 1;
* the Ramond superalgebra span of L_n (even), G_m (odd) and a central C with
      [L_m, L_n] = (m - n) L_{m+n} + (m^3 - m)/12 delta_{m,-n} C,
      [G_m, L_n] = (m - n/2) G_{m+n},
      [G_m, G_n] = 2 L_{m+n} + (1/3)(m^2 - 1/4) delta_{m,-n} C.

The bracket is the super-bracket (anticommutator on odd pairs).  Also here:
the N=1 minimal-model central charges c_{p,p'} and Ramond-sector conformal
weights h_{r,s}.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import List, Optional, Tuple

__all__ = [
    "Kind",
    "BasisElement",
    "BracketResult",
    "SpectrumEntry",
    "L",
    "G",
    "psi",
    "C",
    "UNIT",
    "bracket",
    "minimal_model_spectrum",
    "g0_square_value",
    "spectrum_to_json",
]


class Kind(enum.Enum):
    L = "L"
    G = "G"
    PSI = "psi"
    CENTRAL = "C"
    UNIT = "1"


_RAMOND = {Kind.L, Kind.G, Kind.CENTRAL}
_FERMION = {Kind.PSI, Kind.UNIT}
_ODD = {Kind.G, Kind.PSI}
_UNINDEXED = {Kind.CENTRAL, Kind.UNIT}


@dataclass(frozen=True)
class BasisElement:
    kind: Kind
    index: int = 0

    def __post_init__(self):
        if self.kind in _UNINDEXED and self.index != 0:
            raise ValueError(f"{self.kind.value} carries no mode index")

    @property
    def parity(self) -> int:
        """0 for even, 1 for odd."""
        return 1 if self.kind in _ODD else 0

    @property
    def algebra(self) -> str:
        return "ramond" if self.kind in _RAMOND else "fermion"

    def __repr__(self):
        if self.kind in _UNINDEXED:
            return self.kind.value
        return f"{self.kind.value}_{self.index}"


def L(n: int) -> BasisElement:
    return BasisElement(Kind.L, n)


def G(n: int) -> BasisElement:
    return BasisElement(Kind.G, n)


def psi(n: int) -> BasisElement:
    return BasisElement(Kind.PSI, n)


C = BasisElement(Kind.CENTRAL)
UNIT = BasisElement(Kind.UNIT)


@dataclass(frozen=True)
class BracketResult:
    """Linear combination of basis elements; at most two terms here."""

    terms: Tuple[Tuple[Fraction, BasisElement], ...]

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, element: BasisElement) -> Fraction:
        for c, e in self.terms:
            if e == element:
                return c
        return Fraction(0)

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*{e}" for c, e in self.terms)


def _result(*terms: Tuple[Fraction, BasisElement]) -> BracketResult:
    return BracketResult(tuple((c, e) for c, e in terms if c != 0))


def bracket(a: BasisElement, b: BasisElement,
            c_value: Optional[Fraction] = None) -> BracketResult:
    """Super-bracket [a, b], exact.

    With `c_value` given, the central term is specialized: its coefficient is
    multiplied by c_value and reported on the UNIT element (the identity
    operator); withheld, the formal C element appears instead.
    """
    if a.algebra != b.algebra:
        raise ValueError(f"cannot bracket {a} with {b}: different algebras")
    ka, kb = a.kind, b.kind
    if ka in _UNINDEXED or kb in _UNINDEXED:
        return _result()
    m, n = a.index, b.index

    def central(coef: Fraction) -> Tuple[Fraction, BasisElement]:
        if c_value is None:
            return coef, C
        return coef * Fraction(c_value), UNIT

    if ka == Kind.PSI and kb == Kind.PSI:
        return _result((Fraction(1 if m == -n else 0), UNIT))
    if ka == Kind.L and kb == Kind.L:
        terms = [(Fraction(m - n), L(m + n))]
        if m == -n:
            terms.append(central(Fraction(m ** 3 - m, 12)))
        return _result(*terms)
    if ka == Kind.G and kb == Kind.L:
        return _result((Fraction(m) - Fraction(n, 2), G(m + n)))
    if ka == Kind.L and kb == Kind.G:
        # antisupersymmetry with the even L: [L_m, G_n] = -[G_n, L_m]
        return _result((Fraction(m, 2) - Fraction(n), G(m + n)))
    if ka == Kind.G and kb == Kind.G:
        terms = [(Fraction(2), L(m + n))]
        if m == -n:
            terms.append(central(Fraction(m ** 2, 1) * Fraction(1, 3) - Fraction(1, 12)))
        return _result(*terms)
    raise AssertionError(f"unhandled kinds {ka}, {kb}")


# ---------------------------------------------------------------------------
# N=1 minimal-model spectrum (Ramond sector)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SpectrumEntry:
    p: int
    pp: int
    r: int
    s: int
    c: Fraction
    h: Fraction


def central_charge(p: int, pp: int) -> Fraction:
    return Fraction(3, 2) * (1 - Fraction(2 * (pp - p) ** 2, p * pp))


def conformal_weight(p: int, pp: int, r: int, s: int) -> Fraction:
    return Fraction((r * pp - s * p) ** 2 - (pp - p) ** 2, 8 * p * pp) + Fraction(1, 16)


def minimal_model_spectrum(p: int, pp: int) -> List[SpectrumEntry]:
    """All distinct (c, h_{r,s}) for the admissible pair (p, p').

    Entries with equal (c, h) (the (r, s) <-> (p-r, p'-s) reflection) are
    deduplicated; the first (r, s) in lexicographic order is kept and entries
    come back sorted by h descending.
    """
    if p < 1 or pp < 1:
        raise ValueError("p and p' must be positive")
    if not p < pp:
        raise ValueError(f"admissibility requires p < p' (got p={p}, p'={pp})")
    if (pp - p) % 2 != 0:
        raise ValueError(f"admissibility requires p' - p even (got p' - p = {pp - p})")
    if gcd((pp - p) // 2, p) != 1:
        raise ValueError(f"admissibility requires gcd((p'-p)/2, p) = 1 (got {gcd((pp - p) // 2, p)})")
    c = central_charge(p, pp)
    entries: List[SpectrumEntry] = []
    seen = set()
    for r in range(1, p):
        for s in range(1, pp):
            if (r - s) % 2 == 0:
                continue
            h = conformal_weight(p, pp, r, s)
            if (c, h) in seen:
                continue
            seen.add((c, h))
            entries.append(SpectrumEntry(p, pp, r, s, c, h))
    entries.sort(key=lambda e: e.h, reverse=True)
    return entries


def g0_square_value(c: Fraction, h: Fraction) -> Fraction:
    """Scalar value of G_0^2 on the top space of the weight-h module.

    G_0^2 = (1/2)[G_0, G_0] = L_0 - C/24, so the value is h - c/24; it
    vanishes exactly when h = c/24 (the 1-dimensional top space case).
    """
    return Fraction(h) - Fraction(c) / 24


def spectrum_to_json(entries: List[SpectrumEntry]) -> list:
    return [
        {
            "p": e.p,
            "pp": e.pp,
            "r": e.r,
            "s": e.s,
            "c": [e.c.numerator, e.c.denominator],
            "h": [e.h.numerator, e.h.denominator],
        }
        for e in entries
    ]

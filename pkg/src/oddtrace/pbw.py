"""PBW monomial bases of Fock/Verma modules and their graded traces.

A level-N basis vector is L_{-m_1}...L_{-m_s} G_{-n_1}...G_{-n_t} w (Ramond
Verma modules, m_1 <= ... <= m_s, n_1 < ... < n_t, all >= 1) or
psi_{-n_1}...psi_{-n_t} w (fermion Fock module), applied to a top-space
vector w.  Traces of the twisted operators are computed level by level from
the explicit action on monomials and assembled into a q-series with the
q^{h - c/24} prefactor.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Tuple

from .qseries import FracPowerSeries

__all__ = [
    "PBWMonomial",
    "GradedTraceReport",
    "enumerate_fermion_monomials",
    "enumerate_ns_monomials",
    "signed_monomial_count",
    "fermion_odd_trace",
    "verma_leading_trace",
    "FERMION_PREFACTOR_EXPONENT",
]

F = Fraction

# Fermion Fock module constants: c = 1/2 and L_0 = 1/16 on the top space,
# so the character prefactor is q^{1/16 - 1/48} = q^{1/24}.
FERMION_CENTRAL_CHARGE = F(1, 2)
FERMION_TOP_WEIGHT = F(1, 16)
FERMION_PREFACTOR_EXPONENT = FERMION_TOP_WEIGHT - FERMION_CENTRAL_CHARGE / 24


@dataclass(frozen=True)
class PBWMonomial:
    """bosonic: weakly increasing L-mode magnitudes; fermionic: strictly
    increasing odd-mode magnitudes; top: index into the top-space basis."""

    bosonic: Tuple[int, ...]
    fermionic: Tuple[int, ...]
    top: int

    def __post_init__(self):
        if any(m < 1 for m in self.bosonic) or list(self.bosonic) != sorted(self.bosonic):
            raise ValueError("bosonic part must be a weakly increasing tuple of positive integers")
        if any(n < 1 for n in self.fermionic) or \
                any(a >= b for a, b in zip(self.fermionic, self.fermionic[1:])):
            raise ValueError("fermionic part must be strictly increasing positive integers")
        if self.top < 0:
            raise ValueError("top index must be nonnegative")

    @property
    def level(self) -> int:
        return sum(self.bosonic) + sum(self.fermionic)

    @property
    def fermionic_length(self) -> int:
        return len(self.fermionic)


def _partitions(n: int, max_part: int | None = None) -> Iterator[Tuple[int, ...]]:
    """Partitions of n as weakly increasing tuples."""
    if n == 0:
        yield ()
        return
    if max_part is None:
        max_part = n
    for largest in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - largest, largest):
            yield rest + (largest,)


def _distinct_partitions(n: int, max_part: int | None = None) -> Iterator[Tuple[int, ...]]:
    """Partitions of n into distinct parts, weakly increasing tuples."""
    if n == 0:
        yield ()
        return
    if max_part is None:
        max_part = n
    for largest in range(min(n, max_part), 0, -1):
        for rest in _distinct_partitions(n - largest, largest - 1):
            yield rest + (largest,)


def enumerate_fermion_monomials(level: int) -> List[PBWMonomial]:
    """All Fock-module monomials of the given level (2 top vectors v, vbar)."""
    if level < 0:
        raise ValueError("level must be nonnegative")
    return [PBWMonomial((), ferm, top)
            for ferm in _distinct_partitions(level)
            for top in (0, 1)]


def enumerate_ns_monomials(level: int, top_dim: int) -> List[PBWMonomial]:
    """All Verma-module monomials of the given level over a top space of
    dimension 1 (w = v) or 2 (w in {v, G_0 v})."""
    if level < 0:
        raise ValueError("level must be nonnegative")
    if top_dim not in (1, 2):
        raise ValueError("top_dim must be 1 or 2")
    out = []
    for j in range(level + 1):
        for bos in _partitions(j):
            for ferm in _distinct_partitions(level - j):
                for top in range(top_dim):
                    out.append(PBWMonomial(bos, ferm, top))
    return out


def signed_monomial_count(level: int) -> int:
    """Sum of (-1)^t over level monomials (single top vector), t the number
    of odd generators.  Equals 1 at level 0 and vanishes at every positive
    level: odd and even fermionic lengths pair off exactly."""
    if level < 0:
        raise ValueError("level must be nonnegative")
    return sum((-1) ** m.fermionic_length
               for m in enumerate_ns_monomials(level, top_dim=1))


# ---------------------------------------------------------------------------
# fermion odd trace
# ---------------------------------------------------------------------------


def _psi0_action(top: int) -> Tuple[Fraction, int]:
    """psi_0 on the top space: v -> vbar, vbar -> v/2."""
    return (F(1), 1) if top == 0 else (F(1, 2), 0)


def psi0_theta_diagonal(m: PBWMonomial) -> Fraction:
    """Diagonal entry of psi_0 Theta on the monomial vector.

    Theta sends m w to m (psi_0 w); the outer psi_0 then anticommutes past
    the t odd generators (all brackets [psi_0, psi_{-n}] vanish for n >= 1)
    picking up (-1)^t, and acts on the top space again.  The two top-space
    steps compose to psi_0^2 = 1/2, so the monomial is an eigenvector.
    """
    c1, t1 = _psi0_action(m.top)
    sign = (-1) ** m.fermionic_length
    c2, t2 = _psi0_action(t1)
    assert t2 == m.top
    return sign * c1 * c2


@dataclass(frozen=True)
class GradedTraceReport:
    """Per-level traces and their assembly sum_N trace(N) q^(prefactor + N)."""

    prefactor_exponent: Fraction
    levels: Tuple[Tuple[int, Fraction], ...]
    series: FracPowerSeries

    def to_json_dict(self) -> dict:
        return {
            "prefactor_exponent": [self.prefactor_exponent.numerator,
                                   self.prefactor_exponent.denominator],
            "levels": [[n, t.numerator, t.denominator] for n, t in self.levels],
            "series": self.series.to_json_dict(),
        }


def fermion_odd_trace(max_level: int) -> GradedTraceReport:
    """Graded trace of psi_0 Theta q^{L_0 - c/24} over the Fock module.

    Each level-N trace is the signed distinct-part partition count (both top
    vectors contribute 1/2 apiece); the assembled series matches the eta
    expansion q^{1/24} prod (1 - q^n).
    """
    if max_level < 0:
        raise ValueError("max_level must be nonnegative")
    levels = []
    for n in range(max_level + 1):
        tr = sum(psi0_theta_diagonal(m) for m in enumerate_fermion_monomials(n))
        levels.append((n, tr))
    series = FracPowerSeries.from_terms(
        {FERMION_PREFACTOR_EXPONENT + n: tr for n, tr in levels},
        truncation=FERMION_PREFACTOR_EXPONENT + max_level + 1,
        denominator=24,
    )
    return GradedTraceReport(FERMION_PREFACTOR_EXPONENT, tuple(levels), series)


# ---------------------------------------------------------------------------
# Verma-module leading trace for c = -21/4
# ---------------------------------------------------------------------------

BGG_CENTRAL_CHARGE = F(-21, 4)


def bgg_weight(k: int) -> Fraction:
    """h_k = -3/32 + k(2k+1), the Verma weights in the resolution of the
    irreducible h = -3/32 module."""
    return F(-3, 32) + k * (2 * k + 1)


def verma_leading_trace(k: int, c: Fraction, sign: int) -> Tuple[Fraction, Fraction]:
    """(exponent, value) of the single surviving term of tr G_0 Theta q^{L_0 - c/24}
    on the Verma module of weight h_k.

    Only the top level contributes: the operator is diagonal on the
    1|1-dimensional top space with both eigenvalues sign*|4k+1|/8 (their
    squares are pinned to [(4k+1)/8]^2; the common sign is the one freedom),
    so the trace value is sign*|4k+1|/4 at exponent h_k - c/24 = 1/8 + k(2k+1).
    """
    if Fraction(c) != BGG_CENTRAL_CHARGE:
        raise ValueError("leading traces are implemented for c = -21/4 only")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    exponent = bgg_weight(k) - BGG_CENTRAL_CHARGE / 24
    value = Fraction(sign) * abs(4 * k + 1) / 4
    return exponent, value

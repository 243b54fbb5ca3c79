"""Exact truncated formal series in q**(1/D) over the rationals.

A :class:`FracPowerSeries` stores finitely many nonzero coefficients on the
exponent grid (1/D)Z together with a truncation bound T: the series is exact
for every exponent strictly below T and says nothing about exponents >= T.
Binary operations merge grids to the lcm and propagate the tightest sound
truncation.  All coefficients are `fractions.Fraction`; nothing in this
module touches floating point.
"""

from __future__ import annotations

import functools
from fractions import Fraction
from math import lcm
from typing import Dict, Iterator, List, Mapping, Optional, Tuple, Union

__all__ = [
    "QExponent",
    "FracPowerSeries",
    "euler_product",
    "eta",
    "jacobi_rhs",
]

Rational = Union[int, Fraction, "QExponent"]


def _as_fraction(e: Rational) -> Fraction:
    if isinstance(e, QExponent):
        return e.value
    return Fraction(e)


@functools.total_ordering
class QExponent:
    """An exponent numerator/D on the shared grid of the owning series.

    Compares (and hashes) by exact rational value, so QExponent(2, 24),
    QExponent(1, 12) and Fraction(1, 12) are interchangeable as keys.
    """

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator: int, denominator: int):
        if denominator <= 0:
            raise ValueError("exponent grid denominator must be positive")
        self.numerator = numerator
        self.denominator = denominator

    @property
    def value(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def __eq__(self, other) -> bool:
        if isinstance(other, (QExponent, int, Fraction)):
            return self.value == _as_fraction(other)
        return NotImplemented

    def __lt__(self, other) -> bool:
        if isinstance(other, (QExponent, int, Fraction)):
            return self.value < _as_fraction(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.value)

    def __repr__(self):
        return f"QExponent({self.numerator}, {self.denominator})"


class FracPowerSeries:
    """Truncated series sum_e c_e q^e with c_e rational, e on the 1/D grid.

    Invariants: no stored coefficient is zero, and every stored exponent is
    strictly below the truncation.  Negative exponents are allowed (inverses
    of monomials are Laurent-like).
    """

    __slots__ = ("denominator", "truncation", "_coeffs")

    def __init__(self, denominator: int, truncation: Rational,
                 coeffs: Mapping[int, Fraction]):
        if denominator <= 0:
            raise ValueError("grid denominator must be positive")
        truncation = _as_fraction(truncation)
        clean: Dict[int, Fraction] = {}
        for k, c in coeffs.items():
            c = Fraction(c)
            if c == 0:
                continue
            if Fraction(k, denominator) >= truncation:
                continue
            clean[int(k)] = c
        self.denominator = denominator
        self.truncation = truncation
        self._coeffs = clean

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_terms(terms: Mapping[Rational, Rational], truncation: Rational,
                   denominator: Optional[int] = None) -> "FracPowerSeries":
        """Build a series from an exponent -> coefficient mapping.

        The grid is the lcm of the exponent denominators unless a coarser
        explicit `denominator` (a multiple of that lcm) is requested.
        """
        exps = {_as_fraction(e): Fraction(c) for e, c in terms.items()}
        d = lcm(1, *(e.denominator for e in exps)) if exps else 1
        if denominator is not None:
            if denominator % d != 0:
                raise ValueError(f"denominator {denominator} does not hold all exponents (need multiple of {d})")
            d = denominator
        coeffs = {int(e * d): c for e, c in exps.items()}
        return FracPowerSeries(d, truncation, coeffs)

    @staticmethod
    def zero(truncation: Rational) -> "FracPowerSeries":
        return FracPowerSeries(1, truncation, {})

    @staticmethod
    def one(truncation: Rational) -> "FracPowerSeries":
        return FracPowerSeries(1, truncation, {0: Fraction(1)})

    @staticmethod
    def monomial(exponent: Rational, coefficient: Rational,
                 truncation: Rational) -> "FracPowerSeries":
        return FracPowerSeries.from_terms({_as_fraction(exponent): coefficient}, truncation)

    # -- inspection --------------------------------------------------------

    def terms(self) -> Iterator[Tuple[QExponent, Fraction]]:
        """Stored terms sorted by exponent."""
        for k in sorted(self._coeffs):
            yield QExponent(k, self.denominator), self._coeffs[k]

    def support(self) -> List[Fraction]:
        return [Fraction(k, self.denominator) for k in sorted(self._coeffs)]

    def lowest(self) -> Optional[Fraction]:
        """Lowest stored exponent, or None for the zero series."""
        if not self._coeffs:
            return None
        return Fraction(min(self._coeffs), self.denominator)

    def _low_bound(self) -> Fraction:
        # Smallest exponent at which the series can be nonzero: either the
        # lowest stored term or, failing that, the truncation itself.
        low = self.lowest()
        return self.truncation if low is None else low

    def coeff(self, e: Rational) -> Fraction:
        """Coefficient at exponent e; raises if e is not below the truncation."""
        e = _as_fraction(e)
        if e >= self.truncation:
            raise ValueError(f"exponent {e} is not below the truncation {self.truncation}")
        k = e * self.denominator
        if k.denominator != 1:
            return Fraction(0)  # off-grid exponents carry no term
        return self._coeffs.get(int(k), Fraction(0))

    def is_zero(self) -> bool:
        return not self._coeffs

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "FracPowerSeries") -> "FracPowerSeries":
        if not isinstance(other, FracPowerSeries):
            return NotImplemented
        d = lcm(self.denominator, other.denominator)
        t = min(self.truncation, other.truncation)
        sa, sb = d // self.denominator, d // other.denominator
        out: Dict[int, Fraction] = {k * sa: c for k, c in self._coeffs.items()}
        for k, c in other._coeffs.items():
            key = k * sb
            out[key] = out.get(key, Fraction(0)) + c
        return FracPowerSeries(d, t, out)

    def __neg__(self) -> "FracPowerSeries":
        return FracPowerSeries(self.denominator, self.truncation,
                               {k: -c for k, c in self._coeffs.items()})

    def __sub__(self, other: "FracPowerSeries") -> "FracPowerSeries":
        if not isinstance(other, FracPowerSeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "FracPowerSeries":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, FracPowerSeries):
            return NotImplemented
        d = lcm(self.denominator, other.denominator)
        # Unknown contributions need one factor at or beyond its truncation,
        # hence the product is exact strictly below both cross sums.
        t = min(self.truncation + other._low_bound(),
                other.truncation + self._low_bound())
        sa, sb = d // self.denominator, d // other.denominator
        out: Dict[int, Fraction] = {}
        tn, td = t.numerator, t.denominator
        bterms = [(k * sb, c) for k, c in sorted(other._coeffs.items())]
        for ka, ca in self._coeffs.items():
            ka *= sa
            for kb, cb in bterms:
                k = ka + kb
                if k * td >= tn * d:
                    break  # bterms sorted: later exponents only grow
                out[k] = out.get(k, Fraction(0)) + ca * cb
        return FracPowerSeries(d, t, out)

    __rmul__ = __mul__

    def scale(self, r: Rational) -> "FracPowerSeries":
        r = Fraction(r)
        return FracPowerSeries(self.denominator, self.truncation,
                               {k: c * r for k, c in self._coeffs.items()})

    def shift(self, e: Rational) -> "FracPowerSeries":
        """Multiply by the exact monomial q^e (truncation shifts with it)."""
        e = _as_fraction(e)
        d = lcm(self.denominator, e.denominator)
        s = d // self.denominator
        off = int(e * d)
        return FracPowerSeries(d, self.truncation + e,
                               {k * s + off: c for k, c in self._coeffs.items()})

    def __pow__(self, k: int) -> "FracPowerSeries":
        if not isinstance(k, int) or k < 0:
            raise ValueError("power expects a nonnegative integer exponent")
        if k == 0:
            return FracPowerSeries.one(self.truncation)
        out = self
        for _ in range(k - 1):
            out = out * self
        return out

    def invert(self) -> "FracPowerSeries":
        """Multiplicative inverse q^{-e} * u^{-1} for self = q^e * u, u(0) != 0.

        Standard unit recurrence on the 1/D grid:
            b_0 = 1/c_0,   b_n = -(1/c_0) * sum_{k=1..n} u_k b_{n-k}.
        The result is exact below T - 2e.
        """
        if not self._coeffs:
            raise ValueError("the zero series has no inverse")
        d = self.denominator
        e_key = min(self._coeffs)
        c0 = self._coeffs[e_key]
        u = {k - e_key: c for k, c in self._coeffs.items()}  # unit part
        t_unit = self.truncation - Fraction(e_key, d)  # exactness of u and of u^{-1}
        n_max = (t_unit * d).__ceil__() - 1  # largest grid key below t_unit
        ukeys = sorted(k for k in u if k > 0)
        inv0 = 1 / c0
        b: Dict[int, Fraction] = {0: inv0}
        for n in range(1, n_max + 1):
            s = Fraction(0)
            for k in ukeys:
                if k > n:
                    break
                prev = b.get(n - k)
                if prev is not None:
                    s += u[k] * prev
            if s:
                b[n] = -s * inv0
        t_out = t_unit - Fraction(e_key, d)
        return FracPowerSeries(d, t_out, {k - e_key: c for k, c in b.items()})

    # -- comparison --------------------------------------------------------

    def first_mismatch(self, other: "FracPowerSeries", order: Rational
                       ) -> Optional[Tuple[Fraction, Fraction, Fraction]]:
        """First (exponent, self coeff, other coeff) disagreement below `order`.

        Returns None when the two series agree exactly on every exponent
        strictly below `order`; raises if `order` exceeds either truncation.
        """
        order = _as_fraction(order)
        if order > self.truncation or order > other.truncation:
            raise ValueError(
                f"order {order} exceeds a truncation ({self.truncation}, {other.truncation})")
        exps = {Fraction(k, self.denominator) for k in self._coeffs}
        exps |= {Fraction(k, other.denominator) for k in other._coeffs}
        for e in sorted(exps):
            if e >= order:
                break
            a, b = self.coeff(e), other.coeff(e)
            if a != b:
                return e, a, b
        return None

    def eq_to_order(self, other: "FracPowerSeries", order: Rational) -> bool:
        """True iff all coefficients strictly below `order` agree exactly."""
        return self.first_mismatch(other, order) is None

    def __eq__(self, other) -> bool:
        # Structural equality: same truncation and identical coefficients.
        if not isinstance(other, FracPowerSeries):
            return NotImplemented
        if self.truncation != other.truncation:
            return False
        return {Fraction(k, self.denominator): c for k, c in self._coeffs.items()} == \
               {Fraction(k, other.denominator): c for k, c in other._coeffs.items()}

    __hash__ = None

    # -- serialization -----------------------------------------------------

    def to_json_dict(self) -> dict:
        """Interchange form: terms [exp_num, coeff_num, coeff_den] on grid D."""
        return {
            "denominator": self.denominator,
            "truncation": [self.truncation.numerator, self.truncation.denominator],
            "terms": [[k, self._coeffs[k].numerator, self._coeffs[k].denominator]
                      for k in sorted(self._coeffs)],
        }

    @staticmethod
    def from_json_dict(data: dict) -> "FracPowerSeries":
        t = Fraction(data["truncation"][0], data["truncation"][1])
        coeffs = {int(k): Fraction(cn, cd) for k, cn, cd in data["terms"]}
        return FracPowerSeries(int(data["denominator"]), t, coeffs)

    def __repr__(self):
        body = " + ".join(f"({c})q^({Fraction(k, self.denominator)})"
                          for k, c in sorted(self._coeffs.items())[:6])
        if len(self._coeffs) > 6:
            body += " + ..."
        return f"FracPowerSeries({body or '0'}; T={self.truncation}, D={self.denominator})"

    def pretty(self, max_terms: int = 12) -> str:
        parts = []
        for (e, c) in self.terms():
            if len(parts) == max_terms:
                parts.append("...")
                break
            parts.append(f"{'+' if c > 0 and parts else ''}{c}*q^({e.value})")
        return " ".join(parts) if parts else "0"


# -- named series -----------------------------------------------------------


def euler_product(order: int) -> FracPowerSeries:
    """prod_{n=1}^{order} (1 - q^n), exact below `order`.

    Factors with n > order cannot touch exponents below `order`, so this
    equals the infinite product to the declared truncation.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    out = FracPowerSeries.one(Fraction(order))
    for n in range(1, order + 1):
        coeffs = dict(out._coeffs)
        for k, c in out._coeffs.items():
            key = k + n
            if key >= order:
                continue
            coeffs[key] = coeffs.get(key, Fraction(0)) - c
        out = FracPowerSeries(1, Fraction(order), coeffs)
    return out


def eta(order: int) -> FracPowerSeries:
    """Dedekind eta q-expansion q^(1/24) prod (1 - q^n), on the D=24 grid."""
    return euler_product(order).shift(Fraction(1, 24))


def jacobi_rhs(order: int) -> FracPowerSeries:
    """q^(1/8) sum over integers n of (4n+1) q^(n(2n+1)), on the D=8 grid.

    Includes every n with n(2n+1) < order, hence exact below 1/8 + order.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    terms: Dict[Fraction, int] = {}
    n = 0
    while True:
        hit = False
        for m in ((n, -n) if n else (0,)):
            k = m * (2 * m + 1)
            if k < order:
                terms[Fraction(1, 8) + k] = 4 * m + 1
                hit = True
        if not hit:
            break
        n += 1
    return FracPowerSeries.from_terms(terms, Fraction(1, 8) + order, denominator=8)

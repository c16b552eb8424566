"""Dedekind eta machinery, Eisenstein series, the discriminant and j.

The eta function factors as eta(z) = q^(1/24) * prod_{n>=1} (1 - q^n); the
infinite product is the "eta tail" below, expanded by Euler's pentagonal
number theorem.  Eta quotients prod_d eta(d z)^(r_d) are admitted only when
the leading power sum(d * r_d) / 24 is an integer, which keeps every
expansion an honest Laurent series in q.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .arith import sigma
from .series import QSeries


class EtaQuotientSpec:
    """Immutable multiset of (scale d, exponent r_d) pairs with integral leading power."""

    __slots__ = ("factors",)

    def __init__(self, factors):
        items = dict(factors)
        if not items:
            raise ValueError("eta quotient needs at least one factor")
        for d, r in items.items():
            if not isinstance(d, int) or isinstance(d, bool) or d < 1:
                raise ValueError(f"scale must be a positive integer, got {d!r}")
            if not isinstance(r, int) or isinstance(r, bool) or r == 0:
                raise ValueError(f"exponent for scale {d} must be a nonzero integer, got {r!r}")
        total = sum(d * r for d, r in items.items())
        if total % 24:
            raise ValueError(
                f"leading power {total}/24 is fractional; half-integral weight is unsupported"
            )
        self.factors = tuple(sorted(items.items()))

    @property
    def leading_power(self) -> int:
        return sum(d * r for d, r in self.factors) // 24

    @property
    def weight(self) -> Fraction:
        return Fraction(sum(r for _, r in self.factors), 2)

    def combined(self, other: "EtaQuotientSpec") -> "EtaQuotientSpec":
        """Pointwise sum of exponents (the spec of the product of the two quotients)."""
        merged = dict(self.factors)
        for d, r in other.factors:
            merged[d] = merged.get(d, 0) + r
            if merged[d] == 0:
                del merged[d]
        return EtaQuotientSpec(merged)

    def __eq__(self, other):
        if not isinstance(other, EtaQuotientSpec):
            return NotImplemented
        return self.factors == other.factors

    def __hash__(self):
        return hash(self.factors)

    def __repr__(self):
        inner = ", ".join(f"{d}: {r}" for d, r in self.factors)
        return f"EtaQuotientSpec({{{inner}}})"


@lru_cache(maxsize=None)
def eta_tail(precision: int) -> QSeries:
    """prod_{n>=1} (1 - q^n) via the pentagonal number sum, exact to the given precision.

    The naive product is kept as a test oracle; the two routes cross-check
    each other.
    """
    if precision < 0:
        raise ValueError("eta_tail needs precision >= 0")
    coeffs = [0] * (precision + 1)
    coeffs[0] = 1
    k = 1
    while True:
        g1 = k * (3 * k - 1) // 2
        g2 = k * (3 * k + 1) // 2
        if g1 > precision and g2 > precision:
            break
        s = -1 if k % 2 else 1
        if g1 <= precision:
            coeffs[g1] = s
        if g2 <= precision:
            coeffs[g2] = s
        k += 1
    return QSeries(0, coeffs, precision)


def eta_quotient(spec: EtaQuotientSpec, precision: int) -> QSeries:
    """Expansion of prod_d eta(d z)^(r_d) as q^(leading power) times a unit series."""
    if not isinstance(spec, EtaQuotientSpec):
        spec = EtaQuotientSpec(spec)
    lead = spec.leading_power
    if precision < lead:
        raise ValueError(
            f"precision {precision} is below the leading power {lead} of {spec!r}"
        )
    rel = precision - lead
    acc = QSeries.one(rel)
    for d, r in spec.factors:
        t = eta_tail(-(-rel // d)).v(d) if d > 1 else eta_tail(rel)
        acc = acc * t**r
    if acc.precision < rel:
        raise ValueError(f"internal precision shortfall expanding {spec!r}")
    return acc.truncated(rel).shifted(lead)


def eisenstein4(precision: int) -> QSeries:
    """E_4 = 1 + 240 sum sigma_3(n) q^n."""
    coeffs = [1] + [240 * sigma(n, 3) for n in range(1, precision + 1)]
    return QSeries(0, coeffs[: precision + 1], precision)


def eisenstein6(precision: int) -> QSeries:
    """E_6 = 1 - 504 sum sigma_5(n) q^n (auxiliary; used by the discriminant identity)."""
    coeffs = [1] + [-504 * sigma(n, 5) for n in range(1, precision + 1)]
    return QSeries(0, coeffs[: precision + 1], precision)


def delta(precision: int) -> QSeries:
    """The discriminant Delta = q * prod (1 - q^n)^24, leading coefficient 1."""
    if precision < 1:
        raise ValueError("delta needs precision >= 1")
    return (eta_tail(precision - 1) ** 24).truncated(precision - 1).shifted(1)


def j_series(precision: int) -> QSeries:
    """The modular j-function E_4^3 / Delta = q^-1 + 744 + 196884 q + ..."""
    if precision < -1:
        raise ValueError("j_series needs precision >= -1")
    tgt = max(precision, 1)
    e4 = eisenstein4(tgt + 1)
    dlt = delta(tgt + 2)
    out = (e4**3) * dlt.invert()
    if out.precision < precision:
        raise ValueError("internal precision shortfall expanding j")
    return out.truncated(precision)

"""Per-level registry: Hauptmoduls, weight raisers, cusp data and gap bounds.

Supported levels are the genus-zero prime powers 1, 2, 3, 4, 5, 7, 8, 9, 13,
16, 25.  The four levels 8, 9, 16, 25 carry full even-weight basis machinery
(weight raiser, cusp product polynomial, gap bounds n0/n1); the remaining
levels are used in weight 0 only.

Cusp values involving radicals never enter arithmetic directly: only the
integer-coefficient products over conjugate (for 25: Galois) orbits are
stored, as monic factors of the cusp product polynomial C_N.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .arith import poly_mul
from .eta import EtaQuotientSpec, eta_quotient, j_series
from .series import QSeries

FULL_LEVELS = (8, 9, 16, 25)
LOWER_LEVELS = (1, 2, 3, 4, 5, 7, 13)
SUPPORTED_LEVELS = (1, 2, 3, 4, 5, 7, 8, 9, 13, 16, 25)


@dataclass(frozen=True)
class LevelData:
    """Registry record for one level.

    ``cusp_values`` lists the non-infinity cusps as (description, monic
    integer factor of C_N, coefficients low to high); ``cusp_poly`` is their
    product times nothing else, so its degree is cusp_count - 1.  Lower
    levels carry no cusp polynomial or weight raiser.
    """

    level: int
    prime: int
    cusp_count: int
    cusp_values: tuple[tuple[str, tuple[int, ...]], ...]
    cusp_poly: tuple[int, ...] | None
    hauptmodul_spec: EtaQuotientSpec | None
    weight_raiser_spec: EtaQuotientSpec | None
    raiser_weight: int | None
    full_weight_support: bool

    def n0(self, k: int) -> int:
        """Maximal vanishing order at infinity for weight k with poles only there."""
        if k % 2:
            raise ValueError("odd weights are unsupported")
        N = self.level
        if not self.full_weight_support:
            if k != 0:
                raise ValueError(f"level {N} supports weight 0 only")
            return 0
        if N in (8, 9):
            return k
        if N == 16:
            return 2 * k
        # N == 25: k = 4*l + k' with k' in {0, 2}
        return 10 * (k // 4) + 2 * (k % 4)

    def n1(self, k: int) -> int:
        """Maximal vanishing order at infinity when vanishing at all other cusps."""
        if not self.full_weight_support:
            raise ValueError(f"level {self.level} has no cuspidal-at-other-cusps basis here")
        return self.n0(k) - self.cusp_count + 1


def _prime_psi_spec(p: int) -> EtaQuotientSpec:
    e = 24 // (p - 1)
    return EtaQuotientSpec({1: e, p: -e})


def _expand_cusp_poly(factors) -> tuple[int, ...]:
    poly = [1]
    for _, fac in factors:
        poly = poly_mul(poly, list(fac))
    return tuple(poly)


def _make_level(level, prime, cusp_count, cusp_values, hauptmodul_spec,
                weight_raiser_spec=None, raiser_weight=None, full=False) -> LevelData:
    cusp_poly = _expand_cusp_poly(cusp_values) if full else None
    return LevelData(
        level=level,
        prime=prime,
        cusp_count=cusp_count,
        cusp_values=tuple(cusp_values),
        cusp_poly=cusp_poly,
        hauptmodul_spec=hauptmodul_spec,
        weight_raiser_spec=weight_raiser_spec,
        raiser_weight=raiser_weight,
        full_weight_support=full,
    )


_REGISTRY: dict[int, LevelData] = {}

_REGISTRY[1] = _make_level(1, 1, 1, (), None)
for _p in (2, 3, 5, 7, 13):
    _REGISTRY[_p] = _make_level(_p, _p, 2, (("0", (0, 1)),), _prime_psi_spec(_p))
# Level 4 inherits the standard degree-8 eta ratio; validated downstream by
# the U_2 identity with level 8.
_REGISTRY[4] = _make_level(4, 2, 3, (("0", (0, 1)), ("1/2", (0, 1))),
                           EtaQuotientSpec({1: 8, 4: -8}))
_REGISTRY[8] = _make_level(
    8, 2, 4,
    (("0", (0, 1)), ("1/2", (8, 1)), ("1/4", (4, 1))),
    EtaQuotientSpec({1: 4, 4: 2, 2: -2, 8: -4}),
    EtaQuotientSpec({8: 8, 4: -4}), 2, full=True,
)
_REGISTRY[9] = _make_level(
    9, 3, 4,
    (("0", (0, 1)), ("1/3 and -1/3, conjugate pair", (27, 9, 1))),
    EtaQuotientSpec({1: 3, 9: -3}),
    EtaQuotientSpec({9: 6, 3: -2}), 2, full=True,
)
_REGISTRY[16] = _make_level(
    16, 2, 6,
    (("0", (0, 1)), ("1/8", (2, 1)), ("1/2", (4, 1)),
     ("1/4 and -1/4, conjugate pair", (8, 4, 1))),
    EtaQuotientSpec({1: 2, 8: 1, 2: -1, 16: -2}),
    EtaQuotientSpec({16: 8, 8: -4}), 2, full=True,
)
_REGISTRY[25] = _make_level(
    25, 5, 6,
    (("0", (0, 1)), ("+-1/5 and +-2/5, Galois quartet", (25, 25, 15, 5, 1))),
    EtaQuotientSpec({1: 1, 25: -1}),
    EtaQuotientSpec({25: 10, 5: -2}), 4, full=True,
)


def level_data(level: int) -> LevelData:
    try:
        return _REGISTRY[level]
    except KeyError:
        raise ValueError(f"unsupported level {level}; supported: {SUPPORTED_LEVELS}") from None


def hauptmodul(level: int, precision: int) -> QSeries:
    """The normalized generator psi of the level's function field, q^-1 + O(1).

    Level 1 uses j itself; every other level uses the registered eta quotient.
    """
    data = level_data(level)
    if data.hauptmodul_spec is None:
        return j_series(precision)
    return eta_quotient(data.hauptmodul_spec, precision)


def weight_raiser(level: int, precision: int) -> QSeries:
    """The holomorphic form S with all zeros at infinity; multiplying by it raises weight."""
    data = level_data(level)
    if data.weight_raiser_spec is None:
        raise ValueError(f"level {level} has no weight raiser")
    return eta_quotient(data.weight_raiser_spec, precision)


def cusp_poly(level: int) -> tuple[int, ...]:
    """Monic integer polynomial C_N with a root at each non-infinity cusp value."""
    data = level_data(level)
    if data.cusp_poly is None:
        raise ValueError(f"level {level} has no cusp product polynomial")
    return data.cusp_poly


def cusp_product_series(level: int, precision: int) -> QSeries:
    """C_N evaluated at the Hauptmodul, exact at least to the given precision."""
    poly = cusp_poly(level)
    deg = len(poly) - 1
    psi = hauptmodul(level, precision + deg)
    acc = QSeries.one(psi.precision + 1) * poly[-1]
    for c in reversed(poly[:-1]):
        acc = acc * psi + c
    if acc.precision < precision:
        raise ValueError("internal precision shortfall in cusp product")
    return acc


def _row_echelon(rows: list[QSeries]) -> list[QSeries]:
    """Exact Gaussian elimination of q-series rows, pivoting on the valuation."""
    pending = [r for r in rows if not r.is_zero]
    done: list[QSeries] = []
    while pending:
        piv = min(pending, key=lambda r: r.valuation)
        pending.remove(piv)
        lead = piv.leading_coefficient
        if lead != 1:
            piv = piv * (Fraction(1) / Fraction(lead))
        e = piv.valuation
        pending = [r.submul(r.coefficient(e), piv) for r in pending]
        pending = [r for r in pending if not r.is_zero]
        done = [d.submul(d.coefficient(e), piv) for d in done]
        done.append(piv)
    return done


@lru_cache(maxsize=None)
def e2_25(precision: int) -> QSeries:
    """The unique weight-2 level-25 holomorphic form q^4 + q^6 + 2q^9 + ...

    It is not a combination of eta quotients, so it is produced by echelon
    reduction of the five weight-2 forms theta(psi) * psi^i / C_25(psi),
    i = 0..4; the element of maximal vanishing order must have valuation 4
    and integer coefficients, which is asserted rather than assumed.
    """
    if precision < 4:
        raise ValueError("e2_25 needs precision >= 4")
    work = precision + 24
    psi = hauptmodul(25, work)
    rows = []
    base = psi.theta() * cusp_product_series(25, work).invert()
    rows.append(base)
    for _ in range(4):
        base = base * psi
        rows.append(base)
    echelon = _row_echelon(rows)
    best = max(echelon, key=lambda r: r.valuation)
    if best.valuation != 4:
        raise ArithmeticError(
            f"weight-2 construction invalid: maximal echelon valuation "
            f"{best.valuation}, expected 4"
        )
    if not best.is_integral:
        raise ArithmeticError("weight-2 construction produced non-integral coefficients")
    return best.truncated(precision)

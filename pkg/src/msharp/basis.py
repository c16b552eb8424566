"""Canonical bases of weakly holomorphic forms with poles only at infinity.

For each level N, even weight k and family (M: poles only at infinity;
S: additionally vanishing at every other cusp) the basis elements are
indexed by the pole order m and normalized as

    q^(-m) + (coefficients supported strictly above the gap bound),

where the gap bound is n0(k) for family M and n1(k) for family S.  Elements
are built by the multiply-by-psi-and-reduce recursion: the next candidate is
psi times the previous element, and previously built elements are subtracted
to clear every exponent down the echelon.  The resulting gap, unit leading
coefficient and integrality are asserted on every element, never assumed.

Towers of elements are cached per (level, weight, family) and grown on
demand; rebuilding at higher precision reproduces all previously reported
coefficients exactly.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass

from .arith import as_integer
from .levels import cusp_product_series, e2_25, hauptmodul, level_data, weight_raiser
from .series import PrecisionError, QSeries

FAMILY_M = "M"
FAMILY_S = "S"


@dataclass(frozen=True)
class BasisElement:
    level: int
    weight: int
    pole_order: int
    family: str
    series: QSeries

    @property
    def gap_bound(self) -> int:
        data = level_data(self.level)
        return data.n0(self.weight) if self.family == FAMILY_M else data.n1(self.weight)


class _Tower:
    """All basis elements of one (level, weight, family), grown lazily.

    Element at depth d has pole order m_min + d and precision W - d, where W
    is the working precision of the seed; growth that needs more precision
    rebuilds the tower from scratch (deterministically).
    """

    def __init__(self, level: int, weight: int, family: str):
        if weight % 2:
            raise ValueError("odd weights are unsupported")
        data = level_data(level)
        if family == FAMILY_S and not data.full_weight_support:
            raise ValueError(f"level {level} has no cuspidal-at-other-cusps family here")
        self.data = data
        self.level = level
        self.weight = weight
        self.family = family
        self.gap = data.n0(weight) if family == FAMILY_M else data.n1(weight)
        self.m_min = -self.gap
        self.lock = threading.RLock()
        self.W = None
        self.psi = None
        self.elements: list[BasisElement] = []

    # -- seeds -----------------------------------------------------------------

    def _seed_m(self, prec: int) -> QSeries:
        N, k = self.level, self.weight
        if not self.data.full_weight_support:
            return QSeries.one(prec)
        if N == 25:
            ell, kp = k // 4, k % 4
            parts = []
            if kp:
                parts.append(e2_25(prec + max(0, -10 * ell) + 4))
            if ell:
                w = 10
                base = weight_raiser(N, prec + w - ell * w + abs(ell) * w + 8)
                parts.append(base**ell)
            if not parts:
                return QSeries.one(prec)
            seed = parts[0]
            for p in parts[1:]:
                seed = seed * p
            return seed
        w = 2
        e = k // 2
        if e == 0:
            return QSeries.one(prec)
        base = weight_raiser(N, prec + w - e * w + abs(e) * w + 8)
        return base**e

    def _seed(self, prec: int) -> QSeries:
        if self.family == FAMILY_M:
            seed = self._seed_m(prec)
        else:
            first = self._seed_m(prec + self.data.cusp_count + 2)
            cusp = cusp_product_series(self.level, prec + abs(first.valuation) + 2)
            seed = first * cusp
        if seed.precision < prec:
            raise PrecisionError(
                f"seed for level {self.level} weight {self.weight} family "
                f"{self.family} reached precision {seed.precision} < {prec}"
            )
        if seed.valuation != -self.m_min or seed.leading_coefficient != 1:
            raise ArithmeticError(
                f"seed for level {self.level} weight {self.weight} family "
                f"{self.family} has valuation {seed.valuation}, expected {-self.m_min}"
            )
        return seed

    # -- growth ------------------------------------------------------------------

    def ensure(self, m: int, prec: int):
        """Make the element of pole order m available with precision >= prec."""
        if m < self.m_min:
            raise ValueError(
                f"no basis element with pole order {m} at level {self.level} "
                f"weight {self.weight} family {self.family}; minimum is {self.m_min}"
            )
        depth = m - self.m_min
        with self.lock:
            need_w = prec + depth + 2
            if self.W is None or need_w > self.W:
                self.W = max(need_w, self.W or 0)
                self.psi = hauptmodul(self.level, self.W + abs(self.m_min) + 4)
                self.elements = [self._element(self.m_min, self._seed(self.W))]
            while len(self.elements) <= depth:
                self._extend()

    def _element(self, m: int, series: QSeries) -> BasisElement:
        self._check_contract(m, series)
        return BasisElement(self.level, self.weight, m, self.family, series)

    def _check_contract(self, m: int, series: QSeries):
        if series.valuation != -m or series.leading_coefficient != 1:
            raise ArithmeticError(
                f"basis element m={m} at level {self.level} weight {self.weight} "
                f"family {self.family}: leading term q^{series.valuation} "
                f"(coefficient {series.leading_coefficient}), expected q^{-m}"
            )
        for n in range(-m + 1, self.gap + 1):
            if series.coefficient(n) != 0:
                raise ArithmeticError(
                    f"canonical gap violated at q^{n} for m={m}, level {self.level}, "
                    f"weight {self.weight}, family {self.family}"
                )
        if not series.is_integral:
            raise ArithmeticError(
                f"non-integral coefficient in basis element m={m} at level "
                f"{self.level} weight {self.weight} family {self.family}"
            )

    def _extend(self):
        prev = self.elements[-1]
        m = prev.pole_order + 1
        cand = self.psi * prev.series
        for el in reversed(self.elements):
            c = cand.coefficient(-el.pole_order)
            if c:
                cand = cand.submul(c, el.series)
        self.elements.append(self._element(m, cand))

    def element(self, m: int, prec: int) -> BasisElement:
        self.ensure(m, prec)
        el = self.elements[m - self.m_min]
        if el.series.precision < prec:
            raise PrecisionError(
                f"element m={m} built to precision {el.series.precision} < {prec}"
            )
        return el


_TOWERS: dict[tuple[int, int, str], _Tower] = {}
_TOWERS_LOCK = threading.Lock()


def _tower(level: int, weight: int, family: str) -> _Tower:
    key = (level, weight, family)
    with _TOWERS_LOCK:
        tw = _TOWERS.get(key)
        if tw is None:
            tw = _TOWERS[key] = _Tower(level, weight, family)
        return tw


def clear_basis_cache():
    """Drop all cached towers (results are reproducible, so this is safe)."""
    with _TOWERS_LOCK:
        _TOWERS.clear()


def pole_order_min(level: int, weight: int, family: str = FAMILY_M) -> int:
    """Least admissible pole order for the family (= -n0 resp. -n1)."""
    data = level_data(level)
    return -(data.n0(weight) if family == FAMILY_M else data.n1(weight))


def basis_element(level: int, weight: int, m: int, precision: int,
                  family: str = FAMILY_M) -> BasisElement:
    """The canonical basis element q^(-m) + ... exact at least to the precision."""
    if family not in (FAMILY_M, FAMILY_S):
        raise ValueError(f"family must be {FAMILY_M!r} or {FAMILY_S!r}")
    return _tower(level, weight, family).element(m, precision)


def f_element(level: int, weight: int, m: int, precision: int) -> BasisElement:
    return basis_element(level, weight, m, precision, FAMILY_M)


def g_element(level: int, weight: int, m: int, precision: int) -> BasisElement:
    return basis_element(level, weight, m, precision, FAMILY_S)


def first_m_element(level: int, weight: int, precision: int) -> BasisElement:
    """The maximal-vanishing element of the M family (pole order -n0)."""
    return f_element(level, weight, pole_order_min(level, weight, FAMILY_M), precision)


def first_s_element(level: int, weight: int, precision: int) -> BasisElement:
    """The maximal-vanishing element of the S family (pole order -n1)."""
    return g_element(level, weight, pole_order_min(level, weight, FAMILY_S), precision)


def a_coeff(level: int, weight: int, m: int, n: int) -> int:
    """Coefficient of q^n in the M-family element of pole order m (integer here)."""
    el = f_element(level, weight, m, max(n, level_data(level).n0(weight)) + 1)
    return as_integer(el.series.coefficient(n))


def b_coeff(level: int, weight: int, m: int, n: int) -> int:
    """Coefficient of q^n in the S-family element of pole order m (integer here)."""
    el = g_element(level, weight, m, max(n, level_data(level).n1(weight)) + 1)
    return as_integer(el.series.coefficient(n))

"""Truncated Laurent series in q with exact rational coefficients.

Every series carries an explicit validity window: the coefficient of q^n is
known exactly for all n up to the precision bound, and reading past the
bound raises rather than returning a silent zero.  Operations propagate the
window pessimistically, so a coefficient can be read if and only if it is
genuinely determined by the inputs.

Coefficients are Python ints or ``fractions.Fraction``; floats are rejected.
Series are immutable and safe to share between threads.
"""

from __future__ import annotations

from fractions import Fraction

from . import _backend as _k


class PrecisionError(ValueError):
    """A coefficient outside a series' validity window was requested."""


class NotInvertibleError(ZeroDivisionError):
    """The series is zero to its precision and has no reciprocal."""


def _coerce(x):
    """Validate a user-supplied coefficient; floats are rejected to keep exactness."""
    if isinstance(x, bool):
        raise TypeError("coefficients must be int or Fraction, not bool")
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    raise TypeError(f"coefficients must be int or Fraction, got {type(x).__name__}")


class QSeries:
    """A Laurent series sum_{n=v}^{T} c_n q^n known exactly on [v, T].

    The zero-to-precision series stores no coefficients and has
    ``valuation is None``; nonzero series are normalized so that the
    coefficient at the valuation is nonzero.
    """

    __slots__ = ("_val", "_coeffs", "_prec")

    def __init__(self, valuation: int, coefficients, precision: int):
        if precision < valuation:
            raise ValueError(f"precision {precision} below valuation {valuation}")
        coeffs = [_coerce(c) for c in coefficients]
        if len(coeffs) != precision - valuation + 1:
            raise ValueError(
                f"expected {precision - valuation + 1} coefficients for window "
                f"[{valuation}, {precision}], got {len(coeffs)}"
            )
        self._normalize(valuation, coeffs, precision)

    # -- construction helpers ------------------------------------------------

    def _normalize(self, val, coeffs, prec):
        i = 0
        n = len(coeffs)
        while i < n and coeffs[i] == 0:
            i += 1
        if i == n:
            self._val = prec + 1
            self._coeffs = ()
        else:
            fixed = []
            for c in coeffs[i:]:
                if type(c) is int:
                    fixed.append(c)
                elif c.denominator == 1:
                    fixed.append(c.numerator)
                else:
                    fixed.append(c)
            self._val = val + i
            self._coeffs = tuple(fixed)
        self._prec = prec

    @classmethod
    def _build(cls, val, coeffs, prec):
        # internal: trusted coefficient values, window may be empty
        self = object.__new__(cls)
        self._normalize(val, coeffs, prec)
        return self

    @classmethod
    def zero(cls, precision: int) -> "QSeries":
        """The series that is identically zero up to the given precision."""
        return cls._build(precision + 1, [], precision)

    @classmethod
    def one(cls, precision: int = 0) -> "QSeries":
        return cls.monomial(0, precision)

    @classmethod
    def monomial(cls, exponent: int, precision: int | None = None, coefficient=1) -> "QSeries":
        if precision is None:
            precision = exponent
        pad = [0] * (precision - exponent)
        return cls(exponent, [coefficient] + pad, precision)

    # -- inspection ----------------------------------------------------------

    @property
    def valuation(self) -> int | None:
        """Exponent of the first nonzero coefficient, or None for the zero series."""
        return None if not self._coeffs else self._val

    @property
    def precision(self) -> int:
        """Largest exponent whose coefficient is known exactly."""
        return self._prec

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def leading_coefficient(self):
        if not self._coeffs:
            raise ValueError("zero series has no leading coefficient")
        return self._coeffs[0]

    @property
    def is_integral(self) -> bool:
        """True when every known coefficient has denominator 1."""
        return all(type(c) is int for c in self._coeffs)

    def coefficient(self, n: int):
        """The exact coefficient of q^n; raises PrecisionError past the window."""
        if n > self._prec:
            raise PrecisionError(
                f"coefficient of q^{n} requested but series is only exact to q^{self._prec}"
            )
        if n < self._val:
            return 0
        return self._coeffs[n - self._val]

    def items(self):
        """Iterate (exponent, coefficient) over the stored window."""
        for i, c in enumerate(self._coeffs):
            yield self._val + i, c

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return (
            self._prec == other._prec
            and self._val == other._val
            and self._coeffs == other._coeffs
        )

    def __hash__(self):
        return hash((self._val, self._coeffs, self._prec))

    def __repr__(self) -> str:
        if not self._coeffs:
            return f"QSeries(O(q^{self._prec + 1}))"
        parts = []
        for n, c in self.items():
            if c == 0:
                continue
            if len(parts) == 6:
                parts.append("...")
                break
            mag = -c if c < 0 else c
            sign = "- " if c < 0 else ("+ " if parts else "")
            body = f"{mag}" if n == 0 else (f"q^{n}" if mag == 1 else f"{mag}*q^{n}")
            parts.append(sign + body)
        parts.append(f"+ O(q^{self._prec + 1})")
        return f"QSeries({' '.join(parts)})"

    # -- ring operations -----------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._add_scalar(_coerce(other))
        if not isinstance(other, QSeries):
            return NotImplemented
        prec = min(self._prec, other._prec)
        val = min(self._val, other._val, prec + 1)
        if val > prec:
            return QSeries.zero(prec)
        out = [0] * (prec - val + 1)
        for src in (self, other):
            base = src._val - val
            for i, c in enumerate(src._coeffs):
                if src._val + i > prec:
                    break
                if c:
                    out[base + i] = out[base + i] + c
        return QSeries._build(val, out, prec)

    def __radd__(self, other):
        return self.__add__(other)

    def _add_scalar(self, c):
        if c == 0 or self._prec < 0:
            # a constant is invisible in a window that ends below q^0
            return self
        prec = self._prec
        val = min(self._val, 0)
        out = [0] * (prec - val + 1)
        out[-val] = c
        base = self._val - val
        for i, x in enumerate(self._coeffs):
            out[base + i] = out[base + i] + x if base + i == -val else x
        return QSeries._build(val, out, prec)

    def __neg__(self):
        return QSeries._build(self._val, [-c for c in self._coeffs], self._prec)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._add_scalar(-_coerce(other))
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.__add__(-other)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _coerce(other)
            if c == 0:
                return QSeries.zero(self._prec)
            return QSeries._build(self._val, [c * x for x in self._coeffs], self._prec)
        if not isinstance(other, QSeries):
            return NotImplemented
        prec = min(self._prec + other._val, other._prec + self._val)
        val = self._val + other._val
        n_out = prec - val + 1
        if n_out <= 0:
            # at least one factor is zero to precision; so is the product
            return QSeries.zero(prec)
        out = _k.conv_trunc(list(self._coeffs), list(other._coeffs), n_out)
        return QSeries._build(val, out, prec)

    def __rmul__(self, other):
        return self.__mul__(other)

    def submul(self, c, other: "QSeries") -> "QSeries":
        """self - c*other in one fused pass; same window contract as subtraction."""
        c = _coerce(c)
        if c == 0:
            return self.truncated(min(self._prec, other._prec))
        prec = min(self._prec, other._prec)
        val = min(self._val, other._val, prec + 1)
        if val > prec:
            return QSeries.zero(prec)
        a = [0] * (prec - val + 1)
        base = self._val - val
        for i, x in enumerate(self._coeffs):
            if self._val + i > prec:
                break
            a[base + i] = x
        b = [x for j, x in enumerate(other._coeffs) if other._val + j <= prec]
        out = _k.submul(a, b, c, other._val - val)
        return QSeries._build(val, out, prec)

    def invert(self) -> "QSeries":
        """Reciprocal series; requires a nonzero leading coefficient."""
        if not self._coeffs:
            raise NotInvertibleError("series is zero to precision and cannot be inverted")
        val = self._val
        out = _k.recip_trunc(list(self._coeffs), len(self._coeffs))
        return QSeries._build(-val, out, self._prec - 2 * val)

    def __pow__(self, e: int) -> "QSeries":
        if not isinstance(e, int) or isinstance(e, bool):
            raise TypeError("series powers must be plain integers")
        if e < 0:
            return self.invert() ** (-e)
        if e == 0:
            if not self._coeffs:
                return QSeries.one(max(self._prec, 0))
            return QSeries.one(self._prec - self._val)
        base = self
        acc = None
        while True:
            if e & 1:
                acc = base if acc is None else acc * base
            e >>= 1
            if not e:
                return acc
            base = base * base

    # -- operators specific to q-expansions -----------------------------------

    def theta(self) -> "QSeries":
        """Ramanujan theta operator q d/dq: multiplies the q^n coefficient by n."""
        out = [(self._val + i) * c for i, c in enumerate(self._coeffs)]
        return QSeries._build(self._val, out, self._prec)

    def u(self, p: int) -> "QSeries":
        """Hecke U_p: the result's q^n coefficient is this series' q^(p*n) coefficient."""
        _check_scale(p)
        prec = _floordiv(self._prec, p)
        val = -_floordiv(-self._val, p)
        if val > prec:
            return QSeries.zero(prec)
        out = []
        for n in range(val, prec + 1):
            i = n * p - self._val
            out.append(self._coeffs[i] if 0 <= i < len(self._coeffs) else 0)
        return QSeries._build(val, out, prec)

    def v(self, p: int) -> "QSeries":
        """Hecke V_p, the substitution q -> q^p; intermediate coefficients are 0."""
        _check_scale(p)
        prec = p * self._prec
        if not self._coeffs:
            return QSeries.zero(prec)
        out = [0] * (p * (len(self._coeffs) - 1) + 1)
        for i, c in enumerate(self._coeffs):
            out[p * i] = c
        return QSeries._build(p * self._val, out, prec)

    def shifted(self, k: int) -> "QSeries":
        """Multiply by the exact monomial q^k (window shifts with it)."""
        return QSeries._build(self._val + k, list(self._coeffs), self._prec + k)

    def truncated(self, precision: int) -> "QSeries":
        """Restrict the validity window to end at the given precision."""
        if precision > self._prec:
            raise PrecisionError(
                f"cannot extend precision from {self._prec} to {precision}"
            )
        if precision < self._val:
            return QSeries.zero(precision)
        return QSeries._build(self._val, list(self._coeffs[: precision - self._val + 1]), precision)


def _floordiv(a: int, b: int) -> int:
    return a // b


def _check_scale(p: int):
    # Hecke usage has p prime, but the substitution itself is sound for any
    # positive scale (and eta quotients rescale by composite d).
    if not isinstance(p, int) or isinstance(p, bool) or p < 1:
        raise ValueError(f"expected a positive integer scale, got {p!r}")


def make_series(valuation: int, coefficients, precision: int) -> QSeries:
    """Construct a normalized series from an explicit coefficient window."""
    return QSeries(valuation, coefficients, precision)


def congruent_mod(f: QSeries, g: QSeries, modulus: int, lo: int, hi: int) -> bool:
    """True iff every coefficient of f - g on [lo, hi] is divisible by modulus.

    The range must lie inside both validity windows and all involved
    coefficients must be integers.
    """
    if modulus < 1:
        raise ValueError("modulus must be a positive integer")
    if hi > f.precision or hi > g.precision:
        raise PrecisionError(
            f"range [{lo}, {hi}] exceeds a validity window "
            f"(precisions {f.precision}, {g.precision})"
        )
    for n in range(lo, hi + 1):
        d = f.coefficient(n) - g.coefficient(n)
        if not isinstance(d, int):
            if d.denominator != 1:
                raise ValueError(f"non-integral coefficient difference at q^{n}: {d}")
            d = d.numerator
        if d % modulus:
            return False
    return True


def equal_on_common_window(f: QSeries, g: QSeries) -> bool:
    """True iff f and g agree exactly wherever both are defined."""
    return (f - g).is_zero

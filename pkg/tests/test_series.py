"""Core Laurent series arithmetic: construction, ring ops, Hecke operators."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from msharp.series import (
    NotInvertibleError,
    PrecisionError,
    QSeries,
    congruent_mod,
    equal_on_common_window,
    make_series,
)
from oracles import long_division_invert, poly_mul, series_to_dict


# -- construction ------------------------------------------------------------

def test_make_series_constant():
    s = make_series(0, [1], 0)
    assert s.valuation == 0 and s.precision == 0 and s.coefficient(0) == 1


def test_make_series_window_by_definition():
    s = make_series(-1, [1, -4, 0, 4], 2)
    assert [s.coefficient(n) for n in range(-1, 3)] == [1, -4, 0, 4]
    assert s.precision == 2


def test_make_series_normalizes_leading_zeros():
    s = make_series(0, [0, 0, 1], 2)
    assert s.valuation == 2
    assert s == QSeries.monomial(2)


def test_make_series_rejects_bad_windows():
    with pytest.raises(ValueError):
        make_series(0, [1, 2], 2)        # length mismatch
    with pytest.raises(ValueError):
        make_series(3, [1], 1)           # precision below valuation
    with pytest.raises(TypeError):
        make_series(0, [0.5], 0)         # floats are not exact


def test_zero_series_flagged():
    z = make_series(0, [0, 0], 1)
    assert z.is_zero and z.valuation is None and z.precision == 1
    assert z.coefficient(1) == 0


# -- add / mul / invert / pow -------------------------------------------------

def test_add_inverse_gives_zero_to_precision():
    f = QSeries.monomial(-1, 4)
    assert (f + (-f)).is_zero


def test_add_constants():
    f = make_series(0, [1, 1], 1)
    g = make_series(0, [1, -1], 1)
    s = f + g
    assert s.coefficient(0) == 2 and s.coefficient(1) == 0


def test_add_precision_is_min():
    f = make_series(0, [1, 2, 3], 2)
    g = make_series(-1, [5, 1], 0)
    assert (f + g).precision == 0


def test_mul_monomials():
    # precision min(T_f + v_g, T_g + v_f) = min(3+1, 5-1) = 4
    assert QSeries.monomial(-1, 3) * QSeries.monomial(1, 5) == QSeries.one(4)


def test_mul_geometric_inverse():
    one_minus_q = make_series(0, [1, -1], 1)
    geo = make_series(0, [1] * 9, 8)
    prod = one_minus_q * geo
    assert prod.coefficient(0) == 1
    assert all(prod.coefficient(n) == 0 for n in range(1, prod.precision + 1))


def test_mul_window_contract():
    f = make_series(-2, [1, 1, 1], 0)   # window [-2, 0]
    g = make_series(1, [2, 0, 1], 3)    # window [1, 3]
    p = f * g
    assert p.valuation == -1
    assert p.precision == min(0 + 1, 3 - 2)


def test_invert_geometric():
    f = make_series(-1, [1, -1, 0, 0], 2)    # q^-1 (1 - q)
    inv = f.invert()
    assert inv.valuation == 1
    assert all(inv.coefficient(n) == 1 for n in range(1, inv.precision + 1))
    assert equal_on_common_window(f * inv, QSeries.one(0))


def test_invert_against_long_division():
    a = {0: 3, 1: -2, 2: 5, 3: Fraction(1, 2), 4: -7}
    f = make_series(0, [a.get(i, 0) for i in range(9)], 8)
    inv = f.invert()
    want = long_division_invert(a, 8)
    assert series_to_dict(inv, 0, 8) == {k: v for k, v in want.items()}


def test_invert_zero_series_fails():
    with pytest.raises(NotInvertibleError):
        QSeries.zero(5).invert()


def test_pow_basics():
    q = QSeries.monomial(1, 6)
    assert (q**3).valuation == 3
    f = make_series(-1, [1, 5, 7], 1)
    assert f**0 == QSeries.one(2)
    assert equal_on_common_window(f**3, f * f * f)
    assert equal_on_common_window(f**-2, f.invert() * f.invert())


def test_mul_product_against_oracle():
    af = {-2: 1, 0: -3, 1: Fraction(2, 3)}
    bf = {-1: 4, 2: 1}
    f = make_series(-2, [af.get(i, 0) for i in range(-2, 7)], 6)
    g = make_series(-1, [bf.get(i, 0) for i in range(-1, 6)], 5)
    p = f * g
    want = poly_mul(af, bf, p.precision)
    assert all(p.coefficient(n) == want.get(n, 0)
               for n in range(p.valuation, p.precision + 1))


# -- theta, U, V ----------------------------------------------------------------

def test_theta_kills_constants():
    assert make_series(0, [5, 0], 1).theta().is_zero


def test_theta_by_definition():
    f = make_series(-1, [1, 0, 4], 1)
    t = f.theta()
    assert t.coefficient(-1) == -1 and t.coefficient(0) == 0 and t.coefficient(1) == 4


def test_u_by_definition():
    f = make_series(-2, [1, 0, 0, 3, 5], 2)   # q^-2 + 3q + 5q^2
    u = f.u(2)
    assert series_to_dict(u, -1, 1) == {-1: 1, 0: 0, 1: 5}
    assert u.precision == 1


def test_u_annihilates_odd_support():
    f = make_series(-1, [1, 0, 4, 0, 2], 3)   # odd exponents only
    assert f.u(2).is_zero


def test_v_by_definition():
    f = make_series(-1, [1, 0, 5], 1)
    v = f.v(2)
    assert series_to_dict(v, -2, 2) == {-2: 1, -1: 0, 0: 0, 1: 0, 2: 5}
    assert v.precision == 2


def test_v_of_one():
    assert QSeries.one(3).v(5) == QSeries.one(15)


# -- congruences and window guards ---------------------------------------------

def test_congruent_mod_reflexive():
    f = make_series(-1, [1, 7, 9], 1)
    assert congruent_mod(f, f, 997, -1, 1)


def test_congruent_mod_power_of_two():
    f = make_series(-1, [1, 0, 2048], 1)
    g = make_series(-1, [1, 0, 0], 1)
    assert congruent_mod(f, g, 2**11, -1, 1)
    assert not congruent_mod(f, g, 2**12, -1, 1)


def test_congruent_mod_guards():
    f = make_series(0, [1, 2], 1)
    with pytest.raises(PrecisionError):
        congruent_mod(f, f, 5, 0, 2)
    frac = make_series(0, [Fraction(1, 2), 0], 1)
    with pytest.raises(ValueError):
        congruent_mod(frac, QSeries.zero(1), 3, 0, 1)


def test_coefficient_window_guard():
    f = make_series(0, [1, 2], 1)
    with pytest.raises(PrecisionError):
        f.coefficient(2)
    assert f.coefficient(-5) == 0


def test_truncated():
    f = make_series(-1, [1, 2, 3, 4], 2)
    t = f.truncated(0)
    assert t.precision == 0 and t.coefficient(0) == 2
    with pytest.raises(PrecisionError):
        f.truncated(5)


# -- property tests ---------------------------------------------------------------

coeffs_st = st.lists(
    st.one_of(st.integers(-9, 9),
              st.fractions(min_value=-3, max_value=3, max_denominator=6)),
    min_size=1, max_size=8)


@st.composite
def series_st(draw):
    val = draw(st.integers(-4, 4))
    cs = draw(coeffs_st)
    return make_series(val, cs, val + len(cs) - 1)


@st.composite
def unit_series_st(draw):
    s = draw(series_st())
    if s.is_zero:
        return QSeries.one(s.precision if s.precision >= 0 else 0)
    return s


@settings(max_examples=80, deadline=None)
@given(series_st(), series_st())
def test_add_commutes(f, g):
    assert f + g == g + f


@settings(max_examples=80, deadline=None)
@given(series_st(), series_st())
def test_mul_commutes(f, g):
    assert f * g == g * f


@settings(max_examples=60, deadline=None)
@given(series_st(), series_st(), series_st())
def test_mul_associates_on_common_window(f, g, h):
    assert equal_on_common_window((f * g) * h, f * (g * h))


@settings(max_examples=60, deadline=None)
@given(series_st(), series_st(), series_st())
def test_mul_distributes_on_common_window(f, g, h):
    assert equal_on_common_window(f * (g + h), f * g + f * h)


@settings(max_examples=60, deadline=None)
@given(unit_series_st())
def test_mul_by_inverse_is_one(f):
    assert equal_on_common_window(f * f.invert(), QSeries.one(0))


@settings(max_examples=60, deadline=None)
@given(series_st(), st.sampled_from([2, 3, 5, 7]))
def test_u_of_v_roundtrip(f, p):
    assert equal_on_common_window(f.v(p).u(p), f)


@settings(max_examples=60, deadline=None)
@given(series_st(), series_st())
def test_theta_is_additive(f, g):
    assert (f + g).theta() == f.theta() + g.theta()


@settings(max_examples=60, deadline=None)
@given(series_st(), series_st())
def test_theta_leibniz(f, g):
    assert equal_on_common_window(
        (f * g).theta(), f.theta() * g + f * g.theta())


@settings(max_examples=60, deadline=None)
@given(series_st())
def test_normalization_invariant(f):
    if not f.is_zero:
        assert f.coefficient(f.valuation) != 0


@settings(max_examples=60, deadline=None)
@given(series_st())
def test_precision_probing(f):
    with pytest.raises(PrecisionError):
        f.coefficient(f.precision + 1)


@settings(max_examples=60, deadline=None)
@given(series_st(), series_st(),
       st.one_of(st.integers(-5, 5), st.fractions(min_value=-2, max_value=2,
                                                  max_denominator=4)))
def test_submul_matches_two_step(f, g, c):
    assert f.submul(c, g) == f - g * c

"""Eta tails, eta quotients, Eisenstein series, the discriminant and j."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from msharp.arith import padic_val
from msharp.eta import (
    EtaQuotientSpec,
    delta,
    eisenstein4,
    eisenstein6,
    eta_quotient,
    eta_tail,
    j_series,
)
from oracles import eta_tail_product, series_to_dict


def test_eta_tail_small_against_product_oracle():
    assert series_to_dict(eta_tail(2), 0, 2) == {0: 1, 1: -1, 2: -1}
    want = eta_tail_product(7)
    assert series_to_dict(eta_tail(7), 0, 7) == {n: want.get(n, 0) for n in range(8)}


def test_eta_tail_deeper_against_product_oracle():
    want = eta_tail_product(40)
    got = eta_tail(40)
    assert all(got.coefficient(n) == want.get(n, 0) for n in range(41))


def test_eta_tail_constant_term():
    assert eta_tail(0).coefficient(0) == 1


def test_eta_tail_square_matches_product_oracle():
    sq = eta_tail(30) ** 2
    want_tail = eta_tail_product(30)
    want_sq = {}
    for i, a in want_tail.items():
        for j, b in want_tail.items():
            if i + j <= 30:
                want_sq[i + j] = want_sq.get(i + j, 0) + a * b
    assert all(sq.coefficient(n) == want_sq.get(n, 0) for n in range(31))


def test_spec_validation():
    with pytest.raises(ValueError):
        EtaQuotientSpec({})
    with pytest.raises(ValueError):
        EtaQuotientSpec({1: 1})          # fractional leading power
    with pytest.raises(ValueError):
        EtaQuotientSpec({1: 0, 2: 12})   # zero exponent
    with pytest.raises(ValueError):
        EtaQuotientSpec({0: 24})         # bad scale
    spec = EtaQuotientSpec({1: 4, 4: 2, 2: -2, 8: -4})
    assert spec.leading_power == -1
    assert spec.weight == 0


def test_eta_quotient_printed_expansions():
    # the three golden level expansions
    psi8 = eta_quotient({1: 4, 4: 2, 2: -2, 8: -4}, 3)
    assert series_to_dict(psi8, -1, 3) == {-1: 1, 0: -4, 1: 4, 2: 0, 3: 2}
    s8 = eta_quotient({8: 8, 4: -4}, 10)
    assert series_to_dict(s8, 2, 10) == {2: 1, 3: 0, 4: 0, 5: 0, 6: 4,
                                         7: 0, 8: 0, 9: 0, 10: 6}
    psi9 = eta_quotient({1: 3, 9: -3}, 5)
    assert series_to_dict(psi9, -1, 5) == {-1: 1, 0: -3, 1: 0, 2: 5,
                                           3: 0, 4: 0, 5: -7}


def test_eta_quotient_precision_guard():
    with pytest.raises(ValueError):
        eta_quotient({8: 8, 4: -4}, 1)   # below the leading power 2


def test_eisenstein_values():
    e4 = eisenstein4(3)
    assert e4.coefficient(0) == 1
    assert e4.coefficient(1) == 240
    assert e4.coefficient(2) == 240 * (1 + 2**3)


def test_discriminant_identity():
    lhs = eisenstein4(20) ** 3 - eisenstein6(20) ** 2
    assert (lhs - delta(20) * 1728).is_zero


def test_delta_expansion():
    d = delta(4)
    assert d.valuation == 1 and d.coefficient(1) == 1 and d.coefficient(2) == -24
    assert d == eta_quotient({1: 24}, 4)


def test_j_expansion():
    j = j_series(2)
    assert j.coefficient(-1) == 1
    assert j.coefficient(0) == 744
    assert j.coefficient(1) == 196884
    assert padic_val(j.coefficient(2), 2) == 11


def test_all_series_integral():
    for s in (eta_tail(25), eisenstein4(25), eisenstein6(25), delta(25),
              j_series(25), eta_quotient({1: 3, 9: -3}, 25)):
        assert s.is_integral


@st.composite
def small_specs(draw):
    # constructive: balance the leading power with a scale-1 exponent so the
    # 24-divisibility invariant holds by design
    base = draw(st.dictionaries(st.sampled_from([2, 3, 4, 6]),
                                st.integers(-3, 3).filter(bool),
                                min_size=0, max_size=2))
    t = -sum(d * r for d, r in base.items()) % 24
    if t:
        base[1] = t - 24 if draw(st.booleans()) else t
    elif not base:
        base[1] = draw(st.sampled_from([-24, 24]))
    return base


@settings(max_examples=40, deadline=None)
@given(small_specs(), small_specs())
def test_eta_quotient_multiplicative(d1, d2):
    s1, s2 = EtaQuotientSpec(d1), EtaQuotientSpec(d2)
    merged = dict(s1.factors)
    for d, r in s2.factors:
        merged[d] = merged.get(d, 0) + r
        if not merged[d]:
            del merged[d]
    if not merged:
        return
    combined = s1.combined(s2)
    assert combined.factors == tuple(sorted(merged.items()))
    T = 12
    prod = eta_quotient(s1, T) * eta_quotient(s2, T)
    whole = eta_quotient(combined, min(T, prod.precision))
    assert (prod - whole).is_zero


@settings(max_examples=30, deadline=None)
@given(small_specs(), st.sampled_from([2, 3, 4]))
def test_eta_quotient_rescaling(d, scale):
    spec = EtaQuotientSpec(d)
    scaled = EtaQuotientSpec({s * scale: r for s, r in spec.factors})
    T = 10
    assert (eta_quotient(spec, T).v(scale)
            - eta_quotient(scaled, scale * T)).is_zero

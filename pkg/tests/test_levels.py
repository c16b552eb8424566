"""Level registry: Hauptmoduls, weight raisers, cusp polynomials, gap bounds."""

import pytest

from msharp.levels import (
    FULL_LEVELS,
    SUPPORTED_LEVELS,
    cusp_poly,
    cusp_product_series,
    e2_25,
    hauptmodul,
    level_data,
    weight_raiser,
)
from oracles import series_to_dict


def test_registry_covers_supported_levels():
    for N in SUPPORTED_LEVELS:
        data = level_data(N)
        assert data.level == N
        assert N % data.prime == 0 or N == 1
    with pytest.raises(ValueError):
        level_data(6)
    with pytest.raises(ValueError):
        level_data(11)


def test_gap_bounds_match_table():
    d8, d9, d16, d25 = (level_data(N) for N in (8, 9, 16, 25))
    for k in range(-8, 10, 2):
        assert d8.n0(k) == k and d8.n1(k) == k - 3
        assert d9.n0(k) == k and d9.n1(k) == k - 3
        assert d16.n0(k) == 2 * k and d16.n1(k) == 2 * k - 5
        ell, kp = k // 4, k % 4
        assert d25.n0(k) == 10 * ell + 2 * kp
        assert d25.n1(k) == d25.n0(k) - 5
    # the general relation n1 = n0 - (number of cusps) + 1
    for d in (d8, d9, d16, d25):
        for k in range(-8, 10, 2):
            assert d.n1(k) == d.n0(k) - d.cusp_count + 1


def test_lower_levels_are_weight_zero_only():
    d5 = level_data(5)
    assert d5.n0(0) == 0
    with pytest.raises(ValueError):
        d5.n0(2)
    with pytest.raises(ValueError):
        d5.n1(0)


def test_odd_weight_rejected():
    with pytest.raises(ValueError):
        level_data(8).n0(3)


def test_cusp_polynomials():
    assert cusp_poly(8) == (0, 32, 12, 1)
    assert cusp_poly(9) == (0, 27, 9, 1)
    assert cusp_poly(16) == (0, 64, 80, 40, 10, 1)
    assert cusp_poly(25) == (0, 25, 25, 15, 5, 1)
    with pytest.raises(ValueError):
        cusp_poly(5)


def test_cusp_poly_degree_and_factors():
    for N in FULL_LEVELS:
        data = level_data(N)
        assert len(data.cusp_poly) - 1 == data.cusp_count - 1
        assert data.cusp_poly[-1] == 1
        assert data.cusp_poly[0] == 0  # the cusp 0 contributes the factor t


def test_hauptmodul_printed_expansions():
    assert series_to_dict(hauptmodul(8, 3), -1, 3) == {-1: 1, 0: -4, 1: 4, 2: 0, 3: 2}
    assert series_to_dict(hauptmodul(9, 5), -1, 5) == {-1: 1, 0: -3, 1: 0, 2: 5, 3: 0, 4: 0, 5: -7}
    for N in (2, 3, 5, 7, 13, 4, 16, 25):
        psi = hauptmodul(N, 5)
        assert psi.valuation == -1 and psi.leading_coefficient == 1
        assert psi.is_integral


def test_hauptmodul_level_one_is_j():
    j = hauptmodul(1, 2)
    assert j.coefficient(0) == 744 and j.coefficient(1) == 196884


def test_weight_raiser_printed_expansions():
    assert series_to_dict(weight_raiser(8, 10), 2, 10) == {
        2: 1, 3: 0, 4: 0, 5: 0, 6: 4, 7: 0, 8: 0, 9: 0, 10: 6}
    assert series_to_dict(weight_raiser(9, 8), 2, 8) == {
        2: 1, 3: 0, 4: 0, 5: 2, 6: 0, 7: 0, 8: 5}
    s16 = weight_raiser(16, 20)
    assert {n: s16.coefficient(n) for n in (4, 12, 20)} == {4: 1, 12: 4, 20: 6}
    assert all(s16.coefficient(n) == 0 for n in range(4, 21) if n not in (4, 12, 20))
    s25 = weight_raiser(25, 25)
    assert {n: s25.coefficient(n) for n in (10, 15, 20, 25)} == {10: 1, 15: 2, 20: 5, 25: 10}
    assert all(s25.coefficient(n) == 0 for n in range(10, 26)
               if n not in (10, 15, 20, 25))
    with pytest.raises(ValueError):
        weight_raiser(5, 10)


def test_cusp_product_series_contract():
    for N in FULL_LEVELS:
        data = level_data(N)
        c = cusp_product_series(N, 10)
        assert c.valuation == -(data.cusp_count - 1)
        assert c.leading_coefficient == 1
        assert c.is_integral
        assert c.precision >= 10


def test_e2_25_printed_terms():
    e2 = e2_25(16)
    assert e2.valuation == 4
    assert e2.is_integral
    want = {4: 1, 5: 0, 6: 1, 9: 2, 14: 3, 16: 2}
    got = {n: e2.coefficient(n) for n in want}
    assert got == want
    assert all(e2.coefficient(n) == 0 for n in range(4, 17)
               if n not in (4, 6, 9, 14, 16))


def test_e2_25_requires_room():
    with pytest.raises(ValueError):
        e2_25(3)

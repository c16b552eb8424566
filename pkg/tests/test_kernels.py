"""The two kernel lanes must agree exactly (and with a dict-based oracle)."""

import random
from fractions import Fraction

import pytest

from msharp import _backend, _kernels_py


def _random_coeffs(rng, n, big=False):
    out = []
    for _ in range(n):
        if big:
            out.append(rng.randrange(-(10**40), 10**40))
        elif rng.random() < 0.2:
            out.append(Fraction(rng.randrange(-9, 10), rng.randrange(1, 7)))
        else:
            out.append(rng.randrange(-9, 10))
    return out


def _conv_oracle(a, b, n_out):
    out = [0] * n_out
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            if i + j < n_out:
                out[i + j] += x * y
    return out


def test_pure_conv_against_oracle():
    rng = random.Random(7)
    for _ in range(25):
        a = _random_coeffs(rng, rng.randrange(1, 12))
        b = _random_coeffs(rng, rng.randrange(1, 12))
        n = min(len(a), len(b))
        assert _kernels_py.conv_trunc(a, b, n) == _conv_oracle(a, b, n)


def test_pure_recip_is_right_inverse():
    rng = random.Random(11)
    for _ in range(25):
        a = _random_coeffs(rng, rng.randrange(1, 10))
        if a[0] == 0:
            a[0] = 3
        r = _kernels_py.recip_trunc(a, len(a))
        prod = _conv_oracle(a, r, len(a))
        assert prod[0] == 1 and all(x == 0 for x in prod[1:])


def test_pure_submul():
    a = [1, 2, 3, 4, 5]
    b = [10, 20]
    assert _kernels_py.submul(a, b, 2, 1) == [1, -18, -37, 4, 5]
    assert _kernels_py.submul(a, b, 1, 4) == [1, 2, 3, 4, -5]
    assert _kernels_py.submul(a, [], 1, 0) == a


compiled = pytest.mark.skipif(
    _backend.BACKEND != "cython", reason="compiled kernels not built")


@compiled
def test_lanes_agree_exactly():
    from msharp import _kernels
    rng = random.Random(23)
    for big in (False, True):
        for _ in range(30):
            a = _random_coeffs(rng, rng.randrange(1, 30), big)
            b = _random_coeffs(rng, rng.randrange(1, 30), big)
            n = min(len(a), len(b))
            assert _kernels.conv_trunc(a, b, n) == _kernels_py.conv_trunc(a, b, n)
            if a[0] == 0:
                a[0] = 1
            assert _kernels.recip_trunc(a, len(a)) == _kernels_py.recip_trunc(a, len(a))
            off = rng.randrange(0, len(a))
            s = rng.randrange(-5, 6)
            assert _kernels.submul(a, b, s, off) == _kernels_py.submul(a, b, s, off)

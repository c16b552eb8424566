"""Small integer and rational number-theory helpers used throughout."""

from __future__ import annotations

from fractions import Fraction
from math import isqrt


def is_prime(n: int) -> bool:
    """Primality by trial division; adequate at desk scale."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def divisors(n: int) -> list[int]:
    """Positive divisors of n >= 1 in increasing order."""
    if n < 1:
        raise ValueError("divisors requires n >= 1")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def sigma(n: int, k: int = 1) -> int:
    """Divisor power sum: sum of d**k over the positive divisors d of n."""
    if n < 1:
        raise ValueError("sigma requires n >= 1")
    if k < 0:
        raise ValueError("sigma requires k >= 0")
    return sum(d**k for d in divisors(n))


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) for an odd prime p, by Euler's criterion."""
    if p == 2 or not is_prime(p):
        raise ValueError("legendre requires an odd prime modulus")
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def as_integer(x) -> int:
    """Coerce an exact rational to int, rejecting non-integers."""
    if isinstance(x, bool):
        raise ValueError("as_integer rejects booleans")
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return x.numerator
        raise ValueError(f"not an integer: {x}")
    raise TypeError(f"not an exact rational: {x!r}")


def padic_val(x, p: int) -> int:
    """Largest e such that p**e divides the nonzero integer x.

    Raises ValueError for x == 0: the valuation is infinite there and callers
    that treat zero as satisfying every finite bound must special-case it.
    """
    n = as_integer(x)
    if n == 0:
        raise ValueError("p-adic valuation of 0 is infinite")
    if p < 2 or not is_prime(p):
        raise ValueError("padic_val requires a prime p")
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def inverse_mod(a: int, m: int) -> int:
    """Inverse of a modulo m; a must be coprime to m."""
    return pow(a, -1, m)


def poly_mul(a: list[int], b: list[int]) -> list[int]:
    """Product of integer polynomials given as coefficient lists, low to high."""
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return out

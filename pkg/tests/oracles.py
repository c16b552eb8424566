"""Independent brute-force oracles used to cross-check the library.

Everything here works on plain dicts {exponent: coefficient} with naive
algorithms (term-by-term products, long division, divisor enumeration) and
deliberately shares no code with the package.
"""

from fractions import Fraction


def poly_mul(a: dict, b: dict, top: int) -> dict:
    out = {}
    for i, ca in a.items():
        if not ca:
            continue
        for j, cb in b.items():
            if cb and i + j <= top:
                out[i + j] = out.get(i + j, 0) + ca * cb
    return out


def poly_pow(a: dict, e: int, top: int) -> dict:
    acc = {0: 1}
    for _ in range(e):
        acc = poly_mul(acc, a, top)
    return acc


def long_division_invert(a: dict, top: int) -> dict:
    """1 / a for a unit power series, by naive long division."""
    a0 = a[0]
    inv0 = Fraction(1, 1) / a0
    b = {0: inv0}
    for k in range(1, top + 1):
        s = sum(a.get(i, 0) * b.get(k - i, 0) for i in range(1, k + 1))
        b[k] = -inv0 * s
    return b


def eta_tail_product(top: int) -> dict:
    """prod_{n=1..top} (1 - q^n), the naive route (no pentagonal shortcut)."""
    acc = {0: 1}
    for n in range(1, top + 1):
        acc = poly_mul(acc, {0: 1, n: -1}, top)
    return acc


def divisors_brute(n: int) -> list:
    return [d for d in range(1, n + 1) if n % d == 0]


def sigma_brute(n: int, k: int) -> int:
    return sum(d**k for d in divisors_brute(n))


def series_to_dict(s, lo: int, hi: int) -> dict:
    return {n: s.coefficient(n) for n in range(lo, hi + 1)}

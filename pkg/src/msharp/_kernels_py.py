"""Pure-Python reference kernels for the dense coefficient hot loops.

The compiled extension ``msharp._kernels`` implements the same three
functions with identical semantics and identical summation order; the two
backends must produce exactly equal results on exact inputs.  Coefficients
are Python ints or fractions.Fraction.
"""

from operator import mul, sub


def conv_trunc(a: list, b: list, n_out: int) -> list:
    """Truncated Cauchy product: out[k] = sum_{i+j=k} a[i]*b[j] for k < n_out."""
    la = len(a)
    lb = len(b)
    br = b[::-1]
    out = [0] * n_out
    for k in range(n_out):
        lo = k - lb + 1
        if lo < 0:
            lo = 0
        hi = k if k < la else la - 1
        # b[k-i] == br[lb-1-k+i]; both slices run forward over i = lo..hi
        out[k] = sum(map(mul, a[lo : hi + 1], br[lb - 1 - k + lo : lb - k + hi]))
    return out


def recip_trunc(a: list, n_out: int) -> list:
    """Power series reciprocal of a unit series: conv_trunc(a, out, n_out) = [1, 0, ...]."""
    a0 = a[0]
    if a0 == 1:
        inv0 = 1
    elif a0 == -1:
        inv0 = -1
    else:
        from fractions import Fraction

        inv0 = Fraction(1) / a0
    la = len(a)
    out = [inv0]
    for k in range(1, n_out):
        hi = k if k < la else la - 1
        s = sum(map(mul, a[1 : hi + 1], out[k - 1 : k - hi - 1 if k > hi else None : -1]))
        out.append(-inv0 * s if s else 0)
    return out


def submul(a: list, b: list, s, off: int) -> list:
    """Fused row update: out[i] = a[i] - s*b[i-off] where b overlaps, else a[i]."""
    out = list(a)
    end = off + len(b)
    if end > len(a):
        end = len(a)
    if end <= off:
        return out
    sb = [s * y for y in b[: end - off]]
    out[off:end] = map(sub, a[off:end], sb)
    return out

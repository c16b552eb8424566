# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels for the dense coefficient hot loops.

Semantics and summation order match msharp._kernels_py exactly; the two
backends must produce equal results on exact (int / Fraction) inputs.
The win comes from compiled loop control around arbitrary-precision
coefficient arithmetic.
"""

from fractions import Fraction


def conv_trunc(list a, list b, Py_ssize_t n_out):
    """Truncated Cauchy product: out[k] = sum_{i+j=k} a[i]*b[j] for k < n_out."""
    cdef Py_ssize_t la = len(a)
    cdef Py_ssize_t lb = len(b)
    cdef Py_ssize_t k, i, lo, hi
    cdef list out = [0] * n_out
    cdef object acc
    for k in range(n_out):
        lo = k - lb + 1
        if lo < 0:
            lo = 0
        hi = k if k < la else la - 1
        acc = 0
        for i in range(lo, hi + 1):
            acc = acc + a[i] * b[k - i]
        out[k] = acc
    return out


def recip_trunc(list a, Py_ssize_t n_out):
    """Power series reciprocal of a unit series; a[0] must be nonzero."""
    cdef Py_ssize_t la = len(a)
    cdef Py_ssize_t k, i, hi
    cdef object a0 = a[0]
    cdef object inv0, acc
    if a0 == 1:
        inv0 = 1
    elif a0 == -1:
        inv0 = -1
    else:
        inv0 = Fraction(1) / a0
    cdef list out = [inv0]
    for k in range(1, n_out):
        hi = k if k < la else la - 1
        acc = 0
        for i in range(1, hi + 1):
            acc = acc + a[i] * out[k - i]
        if acc == 0:
            out.append(0)
        else:
            out.append(-inv0 * acc)
    return out


def submul(list a, list b, s, Py_ssize_t off):
    """Fused row update: out[i] = a[i] - s*b[i-off] where b overlaps, else a[i]."""
    cdef Py_ssize_t la = len(a)
    cdef Py_ssize_t end = off + len(b)
    cdef Py_ssize_t i
    cdef list out = list(a)
    if end > la:
        end = la
    for i in range(off, end):
        out[i] = a[i] - s * b[i - off]
    return out

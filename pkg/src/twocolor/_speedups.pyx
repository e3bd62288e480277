# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the inner loops; mirrors _kernels_py exactly.

Exact-integer variants keep Python objects (coefficients overflow machine
words) but run the index arithmetic in C.  Modular variants require m <= 2**31
so residues and their products fit in 64-bit words.
"""

import array

from cpython cimport array


cdef array.array _INT64 = array.array('q', [])

cdef long long _INT64_MAX = 9223372036854775807


def dp_counts(list parts, Py_ssize_t max_n):
    """Unbounded-knapsack table: counts[n] = ways to write n as a sum of parts."""
    cdef list counts = [0] * (max_n + 1)
    counts[0] = 1
    cdef Py_ssize_t p, n
    for p in parts:
        for n in range(p, max_n + 1):
            counts[n] = counts[n] + counts[n - p]
    return counts


def mul_int(list a, list b, Py_ssize_t order):
    """Cauchy product of coefficient lists, truncated to `order`, exact integers."""
    cdef list out = [0] * (order + 1)
    cdef Py_ssize_t la = len(a), lb = len(b)
    cdef Py_ssize_t i, j, imax, jmax
    cdef object ai
    imax = order if la - 1 > order else la - 1
    for i in range(imax + 1):
        ai = a[i]
        if not ai:
            continue
        jmax = order - i
        if lb - 1 < jmax:
            jmax = lb - 1
        for j in range(jmax + 1):
            out[i + j] = out[i + j] + ai * b[j]
    return out


def mul_mod(a, b, Py_ssize_t order, long long m):
    """Cauchy product truncated to `order`, coefficients reduced mod m."""
    cdef array.array abuf = array.array('q', a)
    cdef array.array bbuf = array.array('q', b)
    cdef array.array obuf = array.clone(_INT64, order + 1, zero=True)
    cdef long long[::1] av = abuf
    cdef long long[::1] bv = bbuf
    cdef long long[::1] ov = obuf
    cdef Py_ssize_t la = av.shape[0], lb = bv.shape[0]
    cdef Py_ssize_t n, i, lo, hi
    cdef long long acc
    # (m-1)^2 per term, at most order+1 terms per output coefficient
    cdef bint stepmod = (m - 1) * (m - 1) > _INT64_MAX // (order + 2)
    for n in range(order + 1):
        lo = n - (lb - 1)
        if lo < 0:
            lo = 0
        hi = n if n < la - 1 else la - 1
        acc = 0
        if stepmod:
            for i in range(lo, hi + 1):
                acc = (acc + av[i] * bv[n - i]) % m
        else:
            for i in range(lo, hi + 1):
                acc += av[i] * bv[n - i]
        ov[n] = acc % m
    return list(obuf)


def invert_int(list a, Py_ssize_t order, object inv0):
    """Reciprocal series of `a` to `order`; a[0] must be 1 or -1 and inv0 = a[0]."""
    cdef list b = [0] * (order + 1)
    b[0] = inv0
    cdef Py_ssize_t la = len(a)
    cdef Py_ssize_t n, i, hi
    cdef object s, neg
    neg = -inv0
    for n in range(1, order + 1):
        hi = n if n < la - 1 else la - 1
        s = 0
        for i in range(1, hi + 1):
            s = s + a[i] * b[n - i]
        b[n] = neg * s
    return b


def invert_mod(a, Py_ssize_t order, long long m, long long inv0):
    """Reciprocal series mod m; inv0 must satisfy a[0] * inv0 = 1 (mod m)."""
    cdef array.array abuf = array.array('q', a)
    cdef array.array bbuf = array.clone(_INT64, order + 1, zero=True)
    cdef long long[::1] av = abuf
    cdef long long[::1] bv = bbuf
    cdef Py_ssize_t la = av.shape[0]
    cdef Py_ssize_t n, i, hi
    cdef long long acc, t
    cdef bint stepmod = (m - 1) * (m - 1) > _INT64_MAX // (order + 2)
    bv[0] = inv0 % m
    for n in range(1, order + 1):
        hi = n if n < la - 1 else la - 1
        acc = 0
        if stepmod:
            for i in range(1, hi + 1):
                acc = (acc + av[i] * bv[n - i]) % m
        else:
            for i in range(1, hi + 1):
                acc += av[i] * bv[n - i]
        t = (inv0 * (acc % m)) % m
        bv[n] = (m - t) % m
    return list(bbuf)


def qproduct_int(Py_ssize_t start, Py_ssize_t step, int sign, Py_ssize_t order):
    """Product of (1 + sign * q^e) over e = start, start+step, ... up to `order`."""
    cdef list c = [0] * (order + 1)
    c[0] = 1
    cdef Py_ssize_t e = start, i
    while e <= order:
        if sign < 0:
            for i in range(order, e - 1, -1):
                c[i] = c[i] - c[i - e]
        else:
            for i in range(order, e - 1, -1):
                c[i] = c[i] + c[i - e]
        e += step
    return c


def qproduct_mod(Py_ssize_t start, Py_ssize_t step, int sign, Py_ssize_t order, long long m):
    """Same product as qproduct_int with coefficients reduced mod m."""
    cdef array.array cbuf = array.clone(_INT64, order + 1, zero=True)
    cdef long long[::1] cv = cbuf
    cdef Py_ssize_t e = start, i
    cv[0] = 1 % m
    while e <= order:
        if sign < 0:
            for i in range(order, e - 1, -1):
                cv[i] = (cv[i] - cv[i - e] + m) % m
        else:
            for i in range(order, e - 1, -1):
                cv[i] = (cv[i] + cv[i - e]) % m
        e += step
    return list(cbuf)

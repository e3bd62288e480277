"""Pure-Python kernels for the inner loops.

Same call surface as the compiled `_speedups` extension; `twocolor.kernels`
picks whichever is available at import time.  Coefficient sequences are dense
lists indexed by exponent.  Modular variants expect residues in [0, m) and
return residues in [0, m).
"""

from __future__ import annotations


def dp_counts(parts, max_n):
    """Unbounded-knapsack table: counts[n] = ways to write n as a sum of parts.

    A part value appearing twice in the list acts as two distinguishable
    colors of that part.
    """
    counts = [0] * (max_n + 1)
    counts[0] = 1
    for p in parts:
        for n in range(p, max_n + 1):
            counts[n] += counts[n - p]
    return counts


def mul_int(a, b, order):
    """Cauchy product of coefficient lists, truncated to `order`, exact integers."""
    out = [0] * (order + 1)
    imax = min(len(a) - 1, order)
    for i in range(imax + 1):
        ai = a[i]
        if not ai:
            continue
        jmax = min(len(b) - 1, order - i)
        for j in range(jmax + 1):
            out[i + j] += ai * b[j]
    return out


def mul_mod(a, b, order, m):
    """Cauchy product truncated to `order`, coefficients reduced mod m."""
    out = [0] * (order + 1)
    imax = min(len(a) - 1, order)
    for i in range(imax + 1):
        ai = a[i]
        if not ai:
            continue
        jmax = min(len(b) - 1, order - i)
        for j in range(jmax + 1):
            out[i + j] += ai * b[j]
    return [v % m for v in out]


def invert_int(a, order, inv0):
    """Reciprocal series of `a` to `order`; a[0] must be 1 or -1 and inv0 = a[0].

    Triangular recurrence: b[0] = inv0, b[n] = -inv0 * sum a[i] b[n-i].
    """
    b = [0] * (order + 1)
    b[0] = inv0
    la = len(a)
    neg = -inv0
    for n in range(1, order + 1):
        s = 0
        for i in range(1, min(n, la - 1) + 1):
            s += a[i] * b[n - i]
        b[n] = neg * s
    return b


def invert_mod(a, order, m, inv0):
    """Reciprocal series mod m; inv0 must satisfy a[0] * inv0 = 1 (mod m)."""
    b = [0] * (order + 1)
    b[0] = inv0 % m
    la = len(a)
    for n in range(1, order + 1):
        s = 0
        for i in range(1, min(n, la - 1) + 1):
            s += a[i] * b[n - i]
        b[n] = (-inv0 * s) % m
    return b


def qproduct_int(start, step, sign, order):
    """Product of (1 + sign * q^e) over e = start, start+step, ... up to `order`.

    Each factor is folded in descending so the update stays in place.
    """
    c = [0] * (order + 1)
    c[0] = 1
    e = start
    while e <= order:
        if sign < 0:
            for i in range(order, e - 1, -1):
                c[i] -= c[i - e]
        else:
            for i in range(order, e - 1, -1):
                c[i] += c[i - e]
        e += step
    return c


def qproduct_mod(start, step, sign, order, m):
    """Same product as qproduct_int with coefficients reduced mod m."""
    c = [0] * (order + 1)
    c[0] = 1 % m
    e = start
    while e <= order:
        if sign < 0:
            for i in range(order, e - 1, -1):
                c[i] = (c[i] - c[i - e]) % m
        else:
            for i in range(order, e - 1, -1):
                c[i] = (c[i] + c[i - e]) % m
        e += step
    return c

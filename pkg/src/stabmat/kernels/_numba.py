"""Compiled kernels.

All words are int64 on entry. Bit counting runs in uint64 (mixing signed and
unsigned 64-bit ints in numba promotes to float64, so the helpers convert
once at the top).
"""

import numpy as np
from numba import njit

NAME = "numba"

# 64-bit de Bruijn sequence: (f * DEBRUIJN) >> 58 is a perfect hash of one-hot f
_DEBRUIJN = np.uint64(0x03F79D71B4CB0A89)
_SHIFT = np.uint64(58)
_DB_TABLE = np.zeros(64, dtype=np.int64)
for _i in range(64):
    _DB_TABLE[((1 << _i) * 0x03F79D71B4CB0A89 % (1 << 64)) >> 58] = _i
del _i

_M1 = np.uint64(0x5555555555555555)
_M2 = np.uint64(0x3333333333333333)
_M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
_H01 = np.uint64(0x0101010101010101)
_U1 = np.uint64(1)
_U2 = np.uint64(2)
_U4 = np.uint64(4)
_U56 = np.uint64(56)


@njit(inline="always")
def ctz_onehot(f):
    return _DB_TABLE[(np.uint64(f) * _DEBRUIJN) >> _SHIFT]


@njit(inline="always")
def popcount(x):
    x = np.uint64(x)
    x = x - ((x >> _U1) & _M1)
    x = (x & _M2) + ((x >> _U2) & _M2)
    x = (x + (x >> _U4)) & _M4
    return np.int64((x * _H01) >> _U56)


@njit(inline="always")
def mul_ipow(c, e):
    """c * i^e using component swaps only."""
    e &= 3
    if e == 0:
        return c
    if e == 1:
        return complex(-c.imag, c.real)
    if e == 2:
        return complex(-c.real, -c.imag)
    return complex(c.imag, -c.real)


@njit(inline="always")
def _zero(out):
    for i in range(out.shape[0]):
        out[i] = 0


@njit(inline="always")
def _qf_step(y, x, p, q, f, at, vt, ct):
    inc = 2 if p & f else 0
    if y & f:
        q = (q - at + inc) & 3
    else:
        q = (q + at + inc) & 3
    return y ^ f, x ^ vt, p ^ ct, q


@njit(cache=True)
def qf_walk(out, h, v, a, c, table):
    """Zero ``out`` and write the support in Gray order.

    Odd steps always flip coordinate 1, so the loop runs over pairs of steps
    and only the even step needs a trailing-zero count.
    """
    _zero(out)
    k = v.shape[0]
    out[h] = table[0]
    if k == 0:
        return
    y = 0
    x = h
    p = 0
    q = 0
    a0 = a[0]
    v0 = v[0]
    c0 = c[0]
    for j in range(1 << (k - 1)):
        if j:
            f = (j & -j) << 1
            t = ctz_onehot(f)
            y, x, p, q = _qf_step(y, x, p, q, f, a[t], v[t], c[t])
            out[x] = table[q]
        y, x, p, q = _qf_step(y, x, p, q, 1, a0, v0, c0)
        out[x] = table[q]


@njit(cache=True)
def qf_walk_onehot(out, h, A, V, C, table):
    """Step-by-step walk with length-2^k tables indexed by the one-hot flip word."""
    _zero(out)
    size = A.shape[0]
    y = 0
    x = h
    p = 0
    q = 0
    out[x] = table[0]
    for m in range(1, size):
        f = m & -m
        inc = 2 if p & f else 0
        if y & f:
            q = (q - A[f] + inc) & 3
        else:
            q = (q + A[f] + inc) & 3
        y ^= f
        x ^= V[f]
        p ^= C[f]
        out[x] = table[q]


@njit(cache=True)
def qf_trace(xs, qs, h, v, a, c):
    """Record (x, q) after every write of the walk."""
    k = v.shape[0]
    y = 0
    x = h
    p = 0
    q = 0
    xs[0] = x
    qs[0] = 0
    for m in range(1, 1 << k):
        f = m & -m
        t = ctz_onehot(f)
        inc = 2 if p & f else 0
        if y & f:
            q = (q - a[t] + inc) & 3
        else:
            q = (q + a[t] + inc) & 3
        y ^= f
        x ^= v[t]
        p ^= c[t]
        xs[m] = x
        qs[m] = q


@njit(cache=True)
def qf_naive(out, h, v, d, J, table):
    """Independent per-point evaluation, O(k) work per amplitude."""
    _zero(out)
    k = v.shape[0]
    for y in range(1 << k):
        x = h
        quad = 0
        for t in range(k):
            if (y >> t) & 1:
                x ^= v[t]
                quad += popcount(J[t] & y)
        out[x] = table[(popcount(d & y) + 2 * quad) & 3]


@njit(cache=True)
def pauli_walk(out, psi, w, u, e):
    size = psi.shape[0]
    x = 0
    z = w
    s = 0
    out[z] = mul_ipow(psi[0], e)
    for m in range(1, size):
        f = m & -m
        x ^= f
        z ^= f
        if u & f:
            s ^= 1
        out[z] = mul_ipow(psi[x], e + 2 * s)


@njit(cache=True)
def pauli_walk_onehot(out, psi, w, L, e):
    size = psi.shape[0]
    x = 0
    z = w
    s = 0
    out[z] = mul_ipow(psi[0], e)
    for m in range(1, size):
        f = m & -m
        x ^= f
        z ^= f
        s ^= L[f]
        out[z] = mul_ipow(psi[x], e + 2 * s)


@njit(cache=True)
def pauli_naive(out, psi, w, u, e):
    for x in range(psi.shape[0]):
        out[x ^ w] = mul_ipow(psi[x], e + 2 * (popcount(u & x) & 1))


@njit(cache=True)
def _column_step(M, src, dst, w, u, e):
    size = M.shape[0]
    x = 0
    z = w
    s = 0
    M[z, dst] = mul_ipow(M[0, src], e)
    for r in range(1, size):
        g = r & -r
        x ^= g
        z ^= g
        if u & g:
            s ^= 1
        M[z, dst] = mul_ipow(M[x, src], e + 2 * s)


@njit(cache=True)
def tableau_walk(M, c0, vw, vu, ve):
    """Fill M column by column in Gray order: column x ^ e_t = V_t (column x)."""
    size = c0.shape[0]
    for r in range(size):
        M[r, 0] = c0[r]
    col = 0
    for m in range(1, size):
        f = m & -m
        t = ctz_onehot(f)
        prev = col
        col ^= f
        _column_step(M, prev, col, vw[t], vu[t], ve[t])

"""Vectorized kernels.

A Gray walk is a chain of XOR updates, so a block of steps can be replayed
with ``np.bitwise_xor.accumulate`` (for x and the parity word) and
``np.cumsum`` (for the Z_4 phase) seeded with the state carried over from
the previous block. Block size bounds the scratch memory.
"""

import numpy as np

NAME = "numpy"
BLOCK = 1 << 16


def ctz_onehot(f):
    return np.bitwise_count(f - 1).astype(np.int64)


def popcount(x):
    return np.bitwise_count(x).astype(np.int64)


def mul_ipow(c, e):
    """Elementwise c * i^e by swapping/negating components."""
    e = np.asarray(e) & 3
    re, im = c.real, c.imag
    out = np.empty(np.broadcast(c, e).shape, dtype=np.complex128)
    out.real = np.choose(e, [re, -im, -re, im])
    out.imag = np.choose(e, [im, re, -im, -re])
    return out


def _flip_blocks(size):
    for start in range(1, size, BLOCK):
        m = np.arange(start, min(start + BLOCK, size), dtype=np.int64)
        yield m, m & -m


def _walk_states(h, v, a, c):
    """Yield (xs, qs) per block of Gray steps, excluding the initial point."""
    v = np.asarray(v, dtype=np.int64)
    a = np.asarray(a, dtype=np.int64)
    c = np.asarray(c, dtype=np.int64)
    x, p, q = int(h), 0, 0
    for m, f in _flip_blocks(1 << v.shape[0]):
        t = ctz_onehot(f)
        before = m - 1
        y_before = before ^ (before >> 1)
        p_after = np.bitwise_xor.accumulate(c[t]) ^ p
        p_before = np.empty_like(p_after)
        p_before[0] = p
        p_before[1:] = p_after[:-1]
        inc = np.where(y_before & f, -a[t], a[t]) + 2 * ((p_before & f) != 0)
        qs = (q + np.cumsum(inc)) & 3
        xs = np.bitwise_xor.accumulate(v[t]) ^ x
        yield xs, qs
        x, p, q = int(xs[-1]), int(p_after[-1]), int(qs[-1])


def qf_walk(out, h, v, a, c, table):
    out.fill(0)
    out[h] = table[0]
    for xs, qs in _walk_states(h, v, a, c):
        out[xs] = table[qs]


def qf_walk_onehot(out, h, A, V, C, table):
    out.fill(0)
    x, p, q = int(h), 0, 0
    out[x] = table[0]
    for m, f in _flip_blocks(A.shape[0]):
        before = m - 1
        y_before = before ^ (before >> 1)
        p_after = np.bitwise_xor.accumulate(C[f]) ^ p
        p_before = np.empty_like(p_after)
        p_before[0] = p
        p_before[1:] = p_after[:-1]
        inc = np.where(y_before & f, -A[f], A[f]) + 2 * ((p_before & f) != 0)
        qs = (q + np.cumsum(inc)) & 3
        xs = np.bitwise_xor.accumulate(V[f]) ^ x
        out[xs] = table[qs]
        x, p, q = int(xs[-1]), int(p_after[-1]), int(qs[-1])


def qf_trace(xs, qs, h, v, a, c):
    xs[0] = h
    qs[0] = 0
    pos = 1
    for bx, bq in _walk_states(h, v, a, c):
        xs[pos:pos + bx.shape[0]] = bx
        qs[pos:pos + bq.shape[0]] = bq
        pos += bx.shape[0]


def qf_naive(out, h, v, d, J, table):
    out.fill(0)
    k = v.shape[0]
    for start in range(0, 1 << k, BLOCK):
        y = np.arange(start, min(start + BLOCK, 1 << k), dtype=np.int64)
        x = np.full_like(y, h)
        quad = np.zeros_like(y)
        for t in range(k):
            bit = (y >> t) & 1
            x ^= bit * v[t]
            quad += bit * popcount(J[t] & y)
        out[x] = table[(popcount(d & y) + 2 * quad) & 3]


def _pauli_order(size, w, u):
    """Gray-ordered source indices, destinations and sign parities for X(w)Z(u)."""
    m = np.arange(size, dtype=np.int64)
    x = m ^ (m >> 1)
    flips = np.zeros(size, dtype=np.int64)
    f = m[1:] & -m[1:]
    flips[1:] = (u & f) != 0
    s = np.bitwise_xor.accumulate(flips)
    return x, x ^ w, s


def pauli_walk(out, psi, w, u, e):
    x, z, s = _pauli_order(psi.shape[0], w, u)
    out[z] = mul_ipow(psi[x], e + 2 * s)


def pauli_walk_onehot(out, psi, w, L, e):
    size = psi.shape[0]
    m = np.arange(size, dtype=np.int64)
    x = m ^ (m >> 1)
    flips = np.zeros(size, dtype=np.int64)
    flips[1:] = L[m[1:] & -m[1:]]
    s = np.bitwise_xor.accumulate(flips)
    out[x ^ w] = mul_ipow(psi[x], e + 2 * s)


def pauli_naive(out, psi, w, u, e):
    x = np.arange(psi.shape[0], dtype=np.int64)
    out[x ^ w] = mul_ipow(psi, e + 2 * (popcount(u & x) & 1))


def tableau_walk(M, c0, vw, vu, ve):
    size = c0.shape[0]
    n = size.bit_length() - 1
    # one gather plan per V_t, reused for every column flipping coordinate t
    plans = []
    for t in range(n):
        x, z, s = _pauli_order(size, int(vw[t]), int(vu[t]))
        order = np.argsort(z)
        plans.append((x[order], (int(ve[t]) + 2 * s[order]) & 3))
    M[:, 0] = c0
    col = 0
    for m in range(1, size):
        t = (m & -m).bit_length() - 1
        prev = col
        col ^= 1 << t
        src, e = plans[t]
        M[:, col] = mul_ipow(M[src, prev], e)

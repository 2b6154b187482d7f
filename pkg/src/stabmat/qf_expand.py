"""Quadratic-form description -> dense amplitude vector.

The fast path walks the support in Gray order and keeps the parity word
``p = B y`` cached, so every step costs a constant number of word
operations:

* the phase exponent moves by ``+-a_t + 2 p_t`` (mod 4), sign chosen by the
  current bit ``y_t``;
* ``x`` moves by ``v_t`` and ``p`` moves by column ``t`` of ``B``.

Amplitudes are written as ``gamma * i^q`` from a four-entry table built by
component swaps, so the fast path and the oracle produce identical floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

import numpy as np

from . import kernels, limits, words
from .errors import InvariantViolation, ResourceError
from .model import QuadraticFormDesc, validate_qf


@dataclass(frozen=True)
class InteractionData:
    """Linear coefficients ``a`` (in Z_4) and the columns of ``B`` as words."""

    a: Tuple[int, ...]
    B: Tuple[int, ...]


def build_interaction(desc: QuadraticFormDesc) -> InteractionData:
    k = desc.k
    a = tuple((((desc.d >> t) & 1) + 2 * ((desc.J[t] >> t) & 1)) % 4 for t in range(k))
    cols = [0] * k
    for i in range(k):
        for j in range(i + 1, k):
            if (desc.J[i] >> j) & 1:
                cols[i] |= 1 << j
                cols[j] |= 1 << i
    return InteractionData(a, tuple(cols))


def phase_table(gamma: complex) -> np.ndarray:
    """``[gamma, i*gamma, -gamma, -i*gamma]`` without complex multiplication."""
    g = complex(gamma)
    table = np.array([g, complex(-g.imag, g.real), complex(-g.real, -g.imag),
                      complex(g.imag, -g.real)], dtype=np.complex128)
    return table + 0.0  # turns negated zeros into +0.0


def phase_exponent(desc: QuadraticFormDesc, y: int) -> int:
    """``d.y + 2 y^T J y`` mod 4 by full summation."""
    quad = sum(words.popcount(desc.J[t] & y) for t in range(desc.k) if (y >> t) & 1)
    return (words.popcount(desc.d & y) + 2 * quad) % 4


def support_point(desc: QuadraticFormDesc, y: int) -> int:
    x = desc.h
    for t in range(desc.k):
        if (y >> t) & 1:
            x ^= desc.v[t]
    return x


def _prepare_out(n, out):
    # the kernels zero the buffer themselves
    limits.require(n, limits.max_state_n(), "state vector")
    if out is None:
        try:
            return np.empty(1 << n, dtype=np.complex128)
        except MemoryError as exc:
            raise ResourceError(f"cannot allocate a 2^{n} state vector") from exc
    if out.shape != (1 << n,) or out.dtype != np.complex128:
        raise ValueError(f"out must be a complex128 vector of length {1 << n}")
    return out


def expand(desc: QuadraticFormDesc, out: np.ndarray | None = None, *,
           lookup: str = "ctz", backend: str | None = None,
           validate: bool = True) -> np.ndarray:
    """Dense amplitude vector of ``desc`` in Theta(2^n).

    ``lookup="onehot"`` switches to tables of length 2^k indexed by the flip
    word instead of a trailing-zero count; the output is identical. When
    ``out`` is given it is zeroed and filled in place.
    """
    if validate:
        validate_qf(desc)
    out = _prepare_out(desc.n, out)
    kern = kernels.get(backend)
    inter = build_interaction(desc)
    table = phase_table(desc.gamma)
    v = np.array(desc.v, dtype=np.int64)
    a = np.array(inter.a, dtype=np.int64)
    c = np.array(inter.B, dtype=np.int64)
    if lookup == "ctz" or desc.k == 0:
        kern.qf_walk(out, desc.h, v, a, c, table)
    elif lookup == "onehot":
        size = 1 << desc.k
        A = np.zeros(size, dtype=np.int64)
        V = np.zeros(size, dtype=np.int64)
        C = np.zeros(size, dtype=np.int64)
        onehot = 1 << np.arange(desc.k)
        A[onehot], V[onehot], C[onehot] = a, v, c
        kern.qf_walk_onehot(out, desc.h, A, V, C, table)
    else:
        raise ValueError(f"lookup must be 'ctz' or 'onehot', got {lookup!r}")
    return out


def expand_naive(desc: QuadraticFormDesc, out: np.ndarray | None = None, *,
                 backend: str | None = None, validate: bool = True) -> np.ndarray:
    """Reference: evaluate every support point independently, O(k) per point."""
    if validate:
        validate_qf(desc)
    out = _prepare_out(desc.n, out)
    kern = kernels.get(backend)
    kern.qf_naive(out, desc.h, np.array(desc.v, dtype=np.int64), desc.d,
                  np.array(desc.J, dtype=np.int64), phase_table(desc.gamma))
    return out


def expand_exact(desc: QuadraticFormDesc, *, backend: str | None = None):
    """Walk-order ``(xs, qs)``: support indices and their Z_4 phase exponents.

    Entry ``m`` is the m-th write of the fast path, i.e. ``out[xs[m]] ==
    gamma * i**qs[m]``.
    """
    validate_qf(desc)
    limits.require(desc.n, limits.max_state_n(), "state vector")
    inter = build_interaction(desc)
    xs = np.empty(1 << desc.k, dtype=np.int64)
    qs = np.empty(1 << desc.k, dtype=np.int64)
    kernels.get(backend).qf_trace(xs, qs, desc.h, np.array(desc.v, dtype=np.int64),
                                  np.array(inter.a, dtype=np.int64),
                                  np.array(inter.B, dtype=np.int64))
    return xs, qs


def walk_checked(desc: QuadraticFormDesc) -> np.ndarray:
    """Pure-Python fast path that re-derives every cached quantity at every step.

    Raises :class:`InvariantViolation` if the parity word differs from ``B y``,
    the applied phase increment differs from the full-evaluation difference,
    ``x`` leaves the support parametrization, or an index is written twice.
    """
    validate_qf(desc)
    limits.require(desc.n, limits.NAIVE_MAX_N, "checked walk")
    inter = build_interaction(desc)
    a, cols = inter.a, inter.B
    table = phase_table(desc.gamma)
    out = np.zeros(1 << desc.n, dtype=np.complex128)
    seen = np.zeros(1 << desc.n, dtype=bool)

    def parity_word(y):
        p = 0
        for t in range(desc.k):
            if (y >> t) & 1:
                p ^= cols[t]
        return p

    def write(x, q):
        if seen[x]:
            raise InvariantViolation(f"index {x} written twice")
        seen[x] = True
        out[x] = table[q]

    y, x, p, q = 0, desc.h, 0, 0
    write(x, q)
    for m in range(1, 1 << desc.k):
        f = words.flip_word(m)
        t = words.trailing_zeros(f)
        if f != words.gray(m) ^ words.gray(m - 1):
            raise InvariantViolation(f"flip word mismatch at step {m}")
        inc = (2 if p & f else 0) + (-a[t] if y & f else a[t])
        full = phase_exponent(desc, y ^ f) - phase_exponent(desc, y)
        if (inc - full) % 4:
            raise InvariantViolation(f"step {m}: increment {inc % 4} != {full % 4}")
        q = (q + inc) % 4
        y ^= f
        x ^= desc.v[t]
        p ^= cols[t]
        if p != parity_word(y):
            raise InvariantViolation(f"step {m}: parity word {p:#x} != By {parity_word(y):#x}")
        if x != support_point(desc, y) or q != phase_exponent(desc, y):
            raise InvariantViolation(f"step {m}: walk state left the closed form")
        write(x, q)
    return out

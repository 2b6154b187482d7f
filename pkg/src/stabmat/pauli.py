"""Applying ``i^omega X(w) Z(u)`` to dense vectors.

``X(w) Z(u)|x> = (-1)^(u.x) |x ^ w>``, so the output is a signed permutation
of the input. The fast path walks x in Gray order and carries the single
parity bit ``u.x``.
"""

from __future__ import annotations

import numpy as np

from . import kernels, limits, words
from .errors import DimensionMismatch, InvariantViolation
from .model import PauliOp, state_qubits


def _check(psi, p):
    psi = np.asarray(psi, dtype=np.complex128)
    n = state_qubits(psi)
    if n != p.n:
        raise DimensionMismatch(f"state has {n} qubits, Pauli has {p.n}")
    return psi


def apply_pauli(psi: np.ndarray, p: PauliOp, out: np.ndarray | None = None, *,
                lookup: str = "and", backend: str | None = None) -> np.ndarray:
    """Return ``p |psi>``.

    The result goes to a fresh array, or to ``out``, which
    must not overlap ``psi``. ``lookup="onehot"`` uses a length-2^n table of
    the bits of ``u`` instead of testing ``u & f`` directly.
    """
    psi = _check(psi, p)
    if out is None:
        out = np.empty_like(psi)
    else:
        if out.shape != psi.shape or out.dtype != np.complex128:
            raise DimensionMismatch("out must match the state's shape and dtype")
        if np.shares_memory(out, psi):
            raise ValueError("out must not overlap the input state")
    # x -> x ^ w is a bijection, so every entry is written exactly once
    kern = kernels.get(backend)
    if lookup == "and":
        kern.pauli_walk(out, psi, p.w, p.u, p.omega)
    elif lookup == "onehot":
        L = np.zeros(psi.shape[0], dtype=np.int64)
        for t in range(p.n):
            L[1 << t] = (p.u >> t) & 1
        kern.pauli_walk_onehot(out, psi, p.w, L, p.omega)
    else:
        raise ValueError(f"lookup must be 'and' or 'onehot', got {lookup!r}")
    return out


def apply_pauli_naive(psi: np.ndarray, p: PauliOp, *, backend: str | None = None) -> np.ndarray:
    """Per-entry reference using ``popcount(u & x)``."""
    psi = _check(psi, p)
    out = np.zeros_like(psi)
    kernels.get(backend).pauli_naive(out, psi, p.w, p.u, p.omega)
    return out


def apply_pauli_checked(psi: np.ndarray, p: PauliOp) -> np.ndarray:
    """Pure-Python walk asserting ``s == u.x`` and write-once at every step."""
    psi = _check(psi, p)
    size = psi.shape[0]
    out = np.zeros_like(psi)
    seen = np.zeros(size, dtype=bool)
    x, z, s = 0, p.w, 0
    for m in range(size):
        if m:
            f = words.flip_word(m)
            x ^= f
            z ^= f
            s ^= 1 if p.u & f else 0
        if s != words.dot(p.u, x) or z != x ^ p.w:
            raise InvariantViolation(f"step {m}: cached parity/index out of sync")
        if seen[z]:
            raise InvariantViolation(f"output {z} written twice")
        seen[z] = True
        out[z] = psi[x] * (1j ** ((p.omega + 2 * s) % 4))
    return out


def pauli_dense(p: PauliOp) -> np.ndarray:
    """Explicit 2^n x 2^n matrix: column x has ``omega (-1)^(u.x)`` at row ``x ^ w``."""
    limits.require(p.n, limits.PAULI_DENSE_MAX_N, "dense Pauli")
    size = 1 << p.n
    x = np.arange(size, dtype=np.int64)
    sign = 1 - 2 * (np.bitwise_count(x & p.u).astype(np.int64) & 1)
    M = np.zeros((size, size), dtype=np.complex128, order="F")
    M[x ^ p.w, x] = p.phase * sign
    return M

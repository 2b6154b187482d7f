"""Clifford tableau -> dense 2^n x 2^n matrix in Theta(4^n).

Column ``x ^ e_t`` equals ``V_t`` applied to column ``x``, so after the first
column ``C|0>`` every further column costs one Pauli application along a
Gray walk over column labels. ``C|0>`` itself is the stabilizer state of
the ``U_t`` rows.
"""

from __future__ import annotations

import numpy as np

from . import kernels, limits, words
from .errors import DimensionMismatch, InvariantViolation, ValidationError
from .model import CheckMatrix, CliffordTableau, PauliOp, validate_tableau
from .pauli import apply_pauli, pauli_dense
from .qf_expand import expand
from .reduction import check_to_qf


def first_column(tab: CliffordTableau, *, validate: bool = True) -> np.ndarray:
    """``C|0^n>``, phase fixed by the reduction's positive-amplitude convention."""
    if validate:
        validate_tableau(tab)
    rows = [p.to_row() for p in tab.U]
    return expand(check_to_qf(CheckMatrix(tab.n, rows)))


def _prepare_matrix(n, out):
    limits.require(n, limits.max_matrix_n(), "dense Clifford matrix")
    size = 1 << n
    if out is None:
        return np.empty((size, size), dtype=np.complex128, order="F")
    if out.shape != (size, size) or out.dtype != np.complex128 or not out.flags.f_contiguous:
        raise ValueError(f"out must be a Fortran-ordered complex128 {size}x{size} array")
    # every column is written in full, no zero-fill needed
    return out


def tableau_to_matrix(tab: CliffordTableau, c0: np.ndarray, out: np.ndarray | None = None, *,
                      backend: str | None = None, validate: bool = True) -> np.ndarray:
    """Dense matrix of C from its tableau and first column ``c0``.

    The result is Fortran-ordered, so ``M[:, x]`` is a contiguous column.
    """
    if validate:
        validate_tableau(tab)
    c0 = np.asarray(c0, dtype=np.complex128)
    if c0.shape != (1 << tab.n,):
        raise DimensionMismatch(f"first column has shape {c0.shape}, expected ({1 << tab.n},)")
    M = _prepare_matrix(tab.n, out)
    vw = np.array([p.w for p in tab.V], dtype=np.int64)
    vu = np.array([p.u for p in tab.V], dtype=np.int64)
    ve = np.array([p.omega for p in tab.V], dtype=np.int64)
    kernels.get(backend).tableau_walk(M, c0, vw, vu, ve)
    return M


def expand_tableau(tab: CliffordTableau, out: np.ndarray | None = None, *,
                   backend: str | None = None) -> np.ndarray:
    validate_tableau(tab)
    limits.require(tab.n, limits.max_matrix_n(), "dense Clifford matrix")
    c0 = first_column(tab, validate=False)
    return tableau_to_matrix(tab, c0, out, backend=backend, validate=False)


def tableau_to_matrix_checked(tab: CliffordTableau, c0: np.ndarray) -> np.ndarray:
    """Column walk that verifies write-once and recomputes each step with the reference Pauli map."""
    validate_tableau(tab)
    limits.require(tab.n, limits.CONJUGATION_MAX_N, "checked tableau walk")
    size = 1 << tab.n
    M = np.zeros((size, size), dtype=np.complex128, order="F")
    seen = np.zeros(size, dtype=bool)
    col = 0
    c = np.asarray(c0, dtype=np.complex128)
    for m in range(size):
        if m:
            f = words.flip_word(m)
            t = words.trailing_zeros(f)
            nxt = apply_pauli(c, tab.V[t])
            ref = _reference_apply(c, tab.V[t])
            if not np.array_equal(nxt, ref):
                raise InvariantViolation(f"column step {m} disagrees with the reference map")
            c = nxt
            col ^= f
        if seen[col]:
            raise InvariantViolation(f"column {col} written twice")
        seen[col] = True
        M[:, col] = c
    return M


def _reference_apply(c, p: PauliOp):
    x = np.arange(c.shape[0], dtype=np.int64)
    sign = 1 - 2 * (np.bitwise_count(x & p.u).astype(np.int64) & 1)
    out = np.zeros_like(c)
    out[x ^ p.w] = c * sign * (1j ** p.omega)
    return out


def conjugation_oracle(M: np.ndarray, tab: CliffordTableau) -> float:
    """Max residual of ``M Z_t M^dag = U_t``, ``M X_t M^dag = V_t`` and ``M^dag M = I``."""
    n = tab.n
    limits.require(n, limits.CONJUGATION_MAX_N, "conjugation oracle")
    size = 1 << n
    M = np.asarray(M)
    if M.shape != (size, size):
        raise DimensionMismatch(f"matrix shape {M.shape} does not match n={n}")
    if len(tab.U) != n or len(tab.V) != n:
        raise ValidationError("tableau is incomplete")
    Md = M.conj().T
    worst = float(np.max(np.abs(Md @ M - np.eye(size))))
    for t in range(1, n + 1):
        for gen, image in ((PauliOp.z(n, t), tab.U[t - 1]), (PauliOp.x(n, t), tab.V[t - 1])):
            lhs = M @ pauli_dense(gen) @ Md
            worst = max(worst, float(np.max(np.abs(lhs - pauli_dense(image)))))
    return worst

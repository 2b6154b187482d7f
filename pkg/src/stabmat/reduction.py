"""Check matrix -> quadratic-form description, O(n^3) word operations.

Generators are row-reduced as Pauli operators (products keep their phases)
until the X parts of the first k rows form an RREF basis and the remaining
n - k rows are pure Z type. Then:

* the pure-Z rows ``(-1)^s Z(u)`` pin the shift: ``u . h = s``;
* a row ``i^e X(v_t) Z(u_t)`` maps amplitude at x to x ^ v_t with factor
  ``i^e (-1)^(u_t . x)``, which gives ``a_t = e + 2 u_t.h`` and
  ``B_tj = u_t . v_j``.

Canonical output: v in RREF with ascending pivots, h with zeros at the pivot
positions, gamma = 2^(-k/2).
"""

from __future__ import annotations

import numpy as np

from . import limits, words
from .errors import ContradictorySigns, DimensionMismatch, ValidationError
from .model import CheckMatrix, PauliOp, QuadraticFormDesc, validate_check
from .pauli import apply_pauli


def _eliminate_x(ops: list[PauliOp]) -> int:
    """Bring X parts to RREF in place; return the X rank."""
    row = 0
    n = ops[0].n if ops else 0
    for col in range(n):
        bit = 1 << col
        piv = next((r for r in range(row, len(ops)) if ops[r].w & bit), None)
        if piv is None:
            continue
        ops[row], ops[piv] = ops[piv], ops[row]
        for r in range(len(ops)):
            if r != row and ops[r].w & bit:
                ops[r] = ops[r] * ops[row]
        row += 1
    return row


def _solve_shift(zrows: list[tuple[int, int]], n: int) -> int:
    """Solve ``u . h = s`` for all (u, s); free coordinates set to zero."""
    # augmented rows: bits 0..n-1 hold u, bit n holds s
    rows = [u | (s << n) for u, s in zrows]
    pivots = []
    r = 0
    for col in range(n):
        bit = 1 << col
        piv = next((i for i in range(r, len(rows)) if rows[i] & bit), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i] & bit:
                rows[i] ^= rows[r]
        pivots.append(col)
        r += 1
    if any(row == 1 << n for row in rows[r:]):
        raise ContradictorySigns("Z-type generators demand inconsistent signs")
    h = 0
    for i, col in enumerate(pivots):
        if (rows[i] >> n) & 1:
            h |= 1 << col
    return h


def check_to_qf(cm: CheckMatrix) -> QuadraticFormDesc:
    validate_check(cm)
    n = cm.n
    if n == 0:
        raise ValidationError("n=0 check matrices are not supported")
    ops = cm.paulis()
    k = _eliminate_x(ops)
    xrows, zrows = ops[:k], ops[k:]

    zsigns = []
    for p in zrows:
        # Hermitian pure-Z products carry omega in {0, 2}
        if p.omega % 2:
            raise ContradictorySigns("pure-Z generator with imaginary phase")
        zsigns.append((p.u, p.omega // 2))
    v = [p.w for p in xrows]
    h = words.reduce_by(_solve_shift(zsigns, n), v)

    d = 0
    J = [0] * k
    for t, p in enumerate(xrows):
        a = (p.omega + 2 * words.dot(p.u, h)) % 4
        d |= (a & 1) << t
        J[t] |= (a >> 1) << t
        for j in range(t + 1, k):
            J[t] |= words.dot(p.u, v[j]) << j
    return QuadraticFormDesc(n, h, v, d, J, 2.0 ** (-k / 2))


def stabilizer_eigencheck(cm: CheckMatrix, psi: np.ndarray) -> float:
    """Max over generators of ``||G_r psi - psi||_inf``."""
    psi = np.asarray(psi, dtype=np.complex128)
    if psi.shape != (1 << cm.n,):
        raise DimensionMismatch(f"state length {psi.shape} does not match n={cm.n}")
    limits.require(cm.n, limits.EIGENCHECK_MAX_N, "eigencheck")
    return max((float(np.max(np.abs(apply_pauli(psi, g) - psi))) for g in cm.paulis()),
               default=0.0)

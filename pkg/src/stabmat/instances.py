"""Random and hand-built instances for benchmarks and tests.

Tableaux are generated by composing H, S and CNOT at the Pauli level: for a
gate G, every entry P of the tableau of C becomes G P G^dag, which yields the
tableau of G C. Qubit indices here are 0-based.
"""

from __future__ import annotations

import numpy as np

from . import words
from .model import CheckMatrix, CliffordTableau, PauliOp, QuadraticFormDesc

GATES = ("H", "S", "CNOT")


def random_qf(n: int, k: int | None, rng: np.random.Generator, *, echelon: bool = True,
              gamma: complex | None = None) -> QuadraticFormDesc:
    """Uniform h, d, J and k independent basis vectors (drawn by rejection).

    With ``echelon=True`` the basis is brought to RREF, the form the
    reduction emits; ``gamma`` defaults to ``2^(-k/2)``.
    """
    if k is None:
        k = int(rng.integers(0, n + 1))
    v: list[int] = []
    while len(v) < k:
        cand = int(rng.integers(1, 1 << n)) if n else 0
        if words.rank(v + [cand]) == len(v) + 1:
            v.append(cand)
    if echelon:
        v = words.rref(v)
    h = int(rng.integers(0, 1 << n)) if n else 0
    d = int(rng.integers(0, 1 << k)) if k else 0
    J = [int(rng.integers(0, 1 << k)) & ~((1 << t) - 1) if k else 0 for t in range(k)]
    if gamma is None:
        gamma = 2.0 ** (-k / 2)
    return QuadraticFormDesc(n, h, v, d, J, gamma)


def conjugate(p: PauliOp, gate: str, qubits: tuple[int, ...]) -> PauliOp:
    """``G P G^dag`` for one gate."""
    w, u, e = p.w, p.u, p.omega
    if gate == "H":
        (j,) = qubits
        a, b = (w >> j) & 1, (u >> j) & 1
        # H X^a Z^b H = Z^a X^b = (-1)^(ab) X^b Z^a
        w = (w & ~(1 << j)) | (b << j)
        u = (u & ~(1 << j)) | (a << j)
        e += 2 * (a & b)
    elif gate == "S":
        (j,) = qubits
        a = (w >> j) & 1
        # S X S^dag = Y = i X Z
        e += a
        u ^= a << j
    elif gate == "CNOT":
        c, t = qubits
        w ^= ((w >> c) & 1) << t
        u ^= ((u >> t) & 1) << c
    else:
        raise ValueError(f"unknown gate {gate!r}")
    return PauliOp(p.n, e, w, u)


def apply_gate(tab: CliffordTableau, gate: str, qubits: tuple[int, ...]) -> CliffordTableau:
    return CliffordTableau(tab.n, [conjugate(p, gate, qubits) for p in tab.U],
                           [conjugate(p, gate, qubits) for p in tab.V])


def random_gate_word(n: int, length: int, rng: np.random.Generator):
    gates = GATES if n > 1 else GATES[:2]
    word = []
    for _ in range(length):
        g = gates[int(rng.integers(len(gates)))]
        if g == "CNOT":
            c, t = rng.choice(n, size=2, replace=False)
            word.append((g, (int(c), int(t))))
        else:
            word.append((g, (int(rng.integers(n)),)))
    return word


def tableau_from_word(n: int, word) -> CliffordTableau:
    """Tableau of ``G_L ... G_1`` for ``word = [G_1, ..., G_L]``."""
    tab = CliffordTableau.identity(n)
    for gate, qubits in word:
        tab = apply_gate(tab, gate, qubits)
    return tab


def random_tableau(n: int, rng: np.random.Generator, length: int | None = None) -> CliffordTableau:
    return tableau_from_word(n, random_gate_word(n, 10 * n if length is None else length, rng))


def random_check_matrix(n: int, rng: np.random.Generator) -> CheckMatrix:
    """Stabilizers of a random Clifford applied to |0^n>, with random signs."""
    tab = random_tableau(n, rng)
    rows = []
    for p in tab.U:
        w, u, s = p.to_row()
        rows.append((w, u, s ^ int(rng.integers(2))))
    return CheckMatrix(n, rows)

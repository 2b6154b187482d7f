"""Compact descriptions and their validation.

Dense outputs are plain ``numpy`` arrays: a state is a complex128 vector of
length 2^n indexed by basis label (coordinate 1 at the least significant
bit), and a matrix is a 2^n x 2^n complex128 array in Fortran order so that
column ``x`` (= C|x>) is contiguous.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Tuple

import numpy as np

from . import words
from .errors import (
    BadCommutation,
    DependentBasis,
    DependentRows,
    DimensionMismatch,
    NonCommutingRows,
    NotHermitian,
    ShapeMismatch,
    ValidationError,
    ZeroGamma,
)

# i^e for e in Z_4
PHASES = (1, 1j, -1, -1j)


@dataclass(frozen=True)
class QuadraticFormDesc:
    """Amplitudes ``gamma * i^(d.y) * (-1)^(y^T J y)`` on ``h + span(v)``.

    ``J`` holds ``k`` row words; row ``t`` may only have bits at positions
    ``>= t``.
    """

    n: int
    h: int
    v: Tuple[int, ...]
    d: int
    J: Tuple[int, ...]
    gamma: complex

    def __post_init__(self):
        object.__setattr__(self, "v", tuple(int(x) for x in self.v))
        object.__setattr__(self, "J", tuple(int(x) for x in self.J))
        object.__setattr__(self, "gamma", complex(self.gamma))

    @property
    def k(self) -> int:
        return len(self.v)


@dataclass(frozen=True)
class PauliOp:
    """``i^omega * X(w) Z(u)`` on ``n`` qubits."""

    n: int
    omega: int
    w: int
    u: int

    def __post_init__(self):
        object.__setattr__(self, "omega", self.omega % 4)

    @property
    def phase(self) -> complex:
        return PHASES[self.omega]

    def is_hermitian(self) -> bool:
        # (i^e)^2 (-1)^(w.u) == 1
        return (2 * self.omega + 2 * words.dot(self.w, self.u)) % 4 == 0

    def commutes(self, other: PauliOp) -> bool:
        return words.dot(self.w, other.u) == words.dot(self.u, other.w)

    def __mul__(self, other: PauliOp) -> PauliOp:
        # Z(u) X(w') = (-1)^(u.w') X(w') Z(u)
        e = self.omega + other.omega + 2 * words.dot(self.u, other.w)
        return PauliOp(self.n, e, self.w ^ other.w, self.u ^ other.u)

    @classmethod
    def from_row(cls, n: int, w: int, u: int, sigma: int) -> PauliOp:
        """Convert a signed letter row ``(-1)^sigma (x) P(w_j, u_j)`` with ``P(1,1) = Y``.

        Y = iXZ, so each Y factor contributes one power of i.
        """
        return cls(n, 2 * sigma + words.popcount(w & u), w, u)

    def to_row(self) -> tuple[int, int, int]:
        """Inverse of :meth:`from_row`; requires a Hermitian operator."""
        e = (self.omega - words.popcount(self.w & self.u)) % 4
        if e % 2:
            raise ValidationError("non-Hermitian Pauli has no signed letter form")
        return self.w, self.u, e // 2

    @classmethod
    def z(cls, n: int, t: int) -> PauliOp:
        """``Z_t`` with 1-based ``t``."""
        return cls(n, 0, 0, 1 << (t - 1))

    @classmethod
    def x(cls, n: int, t: int) -> PauliOp:
        return cls(n, 0, 1 << (t - 1), 0)


@dataclass(frozen=True)
class CheckMatrix:
    """``n`` signed generator rows ``(w, u, sigma)``."""

    n: int
    rows: Tuple[Tuple[int, int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple((int(w), int(u), int(s)) for w, u, s in self.rows))

    def paulis(self) -> list[PauliOp]:
        return [PauliOp.from_row(self.n, w, u, s) for w, u, s in self.rows]


@dataclass(frozen=True)
class CliffordTableau:
    """Images ``U[t] = C Z_t C^dag`` and ``V[t] = C X_t C^dag`` (0-based lists)."""

    n: int
    U: Tuple[PauliOp, ...]
    V: Tuple[PauliOp, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "U", tuple(self.U))
        object.__setattr__(self, "V", tuple(self.V))

    @classmethod
    def identity(cls, n: int) -> CliffordTableau:
        return cls(n, [PauliOp.z(n, t) for t in range(1, n + 1)],
                   [PauliOp.x(n, t) for t in range(1, n + 1)])


def _check_word(x: int, nbits: int, what: str) -> None:
    if not words.fits(x, nbits):
        raise ShapeMismatch(f"{what} has bits outside {nbits} positions")


def validate_qf(desc: QuadraticFormDesc) -> None:
    n, k = desc.n, desc.k
    words.check_width(n)
    if k > n:
        raise ShapeMismatch(f"k={k} exceeds n={n}")
    _check_word(desc.h, n, "h")
    for t, vt in enumerate(desc.v, 1):
        _check_word(vt, n, f"v_{t}")
    _check_word(desc.d, k, "d")
    if len(desc.J) != k:
        raise ShapeMismatch(f"J has {len(desc.J)} rows, expected {k}")
    for t, row in enumerate(desc.J):
        _check_word(row, k, f"J row {t + 1}")
        if row & ((1 << t) - 1):
            raise ShapeMismatch(f"J row {t + 1} has entries below the diagonal")
    if not (math.isfinite(desc.gamma.real) and math.isfinite(desc.gamma.imag)):
        raise ValidationError("gamma is not finite")
    if desc.gamma == 0:
        raise ZeroGamma("gamma must be nonzero")
    if words.rank(desc.v) != k:
        raise DependentBasis(f"basis vectors have rank {words.rank(desc.v)} < k={k}")


def validate_check(cm: CheckMatrix) -> None:
    n = cm.n
    words.check_width(n)
    if len(cm.rows) != n:
        raise ShapeMismatch(f"{len(cm.rows)} rows for n={n}")
    for r, (w, u, s) in enumerate(cm.rows, 1):
        _check_word(w, n, f"row {r} X part")
        _check_word(u, n, f"row {r} Z part")
        if s not in (0, 1):
            raise ShapeMismatch(f"row {r} sign bit must be 0 or 1")
    for r in range(n):
        wr, ur, _ = cm.rows[r]
        for s in range(r + 1, n):
            ws, us, _ = cm.rows[s]
            if words.dot(wr, us) != words.dot(ur, ws):
                raise NonCommutingRows(r + 1, s + 1)
    if words.rank((u << n) | w for w, u, _ in cm.rows) != n:
        raise DependentRows("generator rows are linearly dependent")


def validate_tableau(tab: CliffordTableau) -> None:
    n = tab.n
    words.check_width(n)
    if len(tab.U) != n or len(tab.V) != n:
        raise ShapeMismatch(f"tableau needs {n} U and {n} V entries")
    for which, ps in (("U", tab.U), ("V", tab.V)):
        for t, p in enumerate(ps, 1):
            if p.n != n:
                raise ShapeMismatch(f"{which}_{t} acts on {p.n} qubits, expected {n}")
            _check_word(p.w, n, f"{which}_{t} X part")
            _check_word(p.u, n, f"{which}_{t} Z part")
            if not p.is_hermitian():
                raise NotHermitian(t, which)
    for t in range(n):
        for s in range(n):
            if s > t:
                if not tab.U[t].commutes(tab.U[s]):
                    raise BadCommutation(t + 1, s + 1, "U/U must commute")
                if not tab.V[t].commutes(tab.V[s]):
                    raise BadCommutation(t + 1, s + 1, "V/V must commute")
            if tab.U[t].commutes(tab.V[s]) == (s == t):
                raise BadCommutation(t + 1, s + 1, "U_t must anticommute with V_t only")


def state_qubits(psi: np.ndarray) -> int:
    """Qubit count of a dense state; raises if the length is not a power of two."""
    size = psi.shape[0] if psi.ndim == 1 else -1
    if size < 1 or size & (size - 1):
        raise DimensionMismatch(f"state length {size} is not a power of two")
    return size.bit_length() - 1

"""Bit-word helpers and the binary reflected Gray code.

Vectors over F_2 are stored as Python ints (and as ``uint64`` inside the
kernels). Coordinate ``t`` (1-based) lives at bit ``t - 1``, so coordinate 1
is the least significant bit. Bitstrings shown to humans put coordinate 1 on
the left.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import ParseError, ShapeMismatch

WORD_BITS = 64
# Indices up to 2^n - 1 must also fit in a signed machine word.
MAX_WORD_N = WORD_BITS - 1


def gray(m: int) -> int:
    """Return the m-th binary reflected Gray word, ``m ^ (m >> 1)``."""
    return m ^ (m >> 1)


def flip_word(m: int) -> int:
    """One-hot word of the bit flipped between ``gray(m - 1)`` and ``gray(m)``."""
    return m & -m


def trailing_zeros(f: int) -> int:
    """Index of the lowest set bit of ``f`` (``f`` must be nonzero)."""
    return (f & -f).bit_length() - 1


def popcount(x: int) -> int:
    return x.bit_count()


def parity(x: int) -> int:
    return popcount(x) & 1


def dot(a: int, b: int) -> int:
    """Inner product over F_2."""
    return popcount(a & b) & 1


def check_width(n: int, what: str = "n") -> None:
    if n < 0 or n > MAX_WORD_N:
        raise ShapeMismatch(f"{what}={n} outside the supported range 0..{MAX_WORD_N}")


def fits(x: int, nbits: int) -> bool:
    return 0 <= x < (1 << nbits)


def to_bitstring(x: int, nbits: int) -> str:
    """Render ``x`` with coordinate 1 as the leftmost character."""
    return "".join("1" if (x >> t) & 1 else "0" for t in range(nbits))


def from_bitstring(s: str, line: int | None = None) -> int:
    """Inverse of :func:`to_bitstring`."""
    x = 0
    for t, ch in enumerate(s):
        if ch == "1":
            x |= 1 << t
        elif ch != "0":
            raise ParseError(f"invalid bit character {ch!r} in {s!r}", line)
    return x


def rank(rows: Iterable[int]) -> int:
    """Rank over F_2 of a list of row words."""
    # xor basis keyed by leading bit
    basis: dict[int, int] = {}
    r = 0
    for row in rows:
        while row:
            lead = row.bit_length() - 1
            if lead in basis:
                row ^= basis[lead]
            else:
                basis[lead] = row
                r += 1
                break
    return r


def rref(rows: Sequence[int]) -> list[int]:
    """Reduced row-echelon form with pivots at lowest set bits, ascending.

    Zero rows are dropped. The pivot of a row is its lowest coordinate, which
    is the leftmost column when the row is printed as a bitstring.
    """
    rows = [r for r in rows if r]
    out: list[int] = []
    while rows:
        piv = min(r & -r for r in rows)
        i = next(j for j, r in enumerate(rows) if r & piv)
        prow = rows.pop(i)
        rows = [r ^ prow if r & piv else r for r in rows]
        rows = [r for r in rows if r]
        out = [r ^ prow if r & piv else r for r in out]
        out.append(prow)
    return out


def reduce_by(x: int, basis: Sequence[int]) -> int:
    """Clear the pivot bits of ``x`` using an RREF basis from :func:`rref`."""
    for b in basis:
        if x & (b & -b):
            x ^= b
    return x

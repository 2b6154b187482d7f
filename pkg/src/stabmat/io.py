"""Text formats for compact descriptions and text/binary encodings for dense outputs.

Bitstrings and Pauli strings are written with coordinate 1 as the leftmost
character. See FORMATS.md for the grammars.
"""

from __future__ import annotations

import re
import struct

import numpy as np

from . import words
from .errors import BadPhaseToken, LengthMismatch, ParseError, StabmatError
from .model import (
    CheckMatrix,
    CliffordTableau,
    PauliOp,
    QuadraticFormDesc,
    validate_check,
    validate_qf,
    validate_tableau,
)

MAGIC = b"STBM"
VERSION = 1
KIND_STATE = 0
KIND_MATRIX = 1
_HEADER = struct.Struct("<4sBBH8x")

_PHASE_TOKENS = {"+": 0, "+i": 1, "-": 2, "-i": 3}
_TOKEN_OF = {v: k for k, v in _PHASE_TOKENS.items()}
_LETTER = {"I": (0, 0), "X": (1, 0), "Z": (0, 1), "Y": (1, 1)}
_LETTER_OF = {v: k for k, v in _LETTER.items()}
_PAULI_RE = re.compile(r"^([^IXYZ]*)([A-Za-z]*)$")


def _lines(text: str):
    """Yield (lineno, stripped content) for non-blank, non-comment lines."""
    for i, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield i, line


# -- Pauli strings -----------------------------------------------------------

def parse_pauli(s: str, line: int | None = None) -> PauliOp:
    """``"+XZ"`` / ``"-iY"`` style string -> PauliOp (Y carries its own factor i)."""
    m = _PAULI_RE.match(s.strip())
    if not m or not m.group(2):
        raise ParseError(f"malformed Pauli string {s!r}", line)
    token, letters = m.groups()
    if token not in _PHASE_TOKENS:
        raise BadPhaseToken(f"phase token {token!r} not one of + - +i -i", line)
    w = u = 0
    for t, ch in enumerate(letters):
        if ch not in _LETTER:
            raise ParseError(f"invalid Pauli letter {ch!r} in {s!r}", line)
        a, b = _LETTER[ch]
        w |= a << t
        u |= b << t
    n = len(letters)
    return PauliOp(n, _PHASE_TOKENS[token] + words.popcount(w & u), w, u)


def format_pauli(p: PauliOp) -> str:
    token = _TOKEN_OF[(p.omega - words.popcount(p.w & p.u)) % 4]
    letters = "".join(_LETTER_OF[((p.w >> t) & 1, (p.u >> t) & 1)] for t in range(p.n))
    return token + letters


# -- quadratic forms ---------------------------------------------------------

def _field(entry, name):
    lineno, line = entry
    key, sep, value = line.partition("=")
    if not sep or key.strip() != name:
        raise ParseError(f"expected '{name}=...', got {line!r}", lineno)
    return lineno, value.strip()


def _int_field(entry, name):
    lineno, value = _field(entry, name)
    try:
        return int(value)
    except ValueError:
        raise ParseError(f"{name} must be an integer, got {value!r}", lineno) from None


def _bits_field(entry, name, nbits):
    lineno, value = _field(entry, name)
    if len(value) != nbits:
        raise LengthMismatch(f"{name} needs {nbits} bits, got {len(value)}", lineno)
    return words.from_bitstring(value, lineno)


def parse_qf(text: str, *, validate: bool = True) -> QuadraticFormDesc:
    entries = list(_lines(text))
    pos = 0

    def take(name):
        nonlocal pos
        if pos >= len(entries):
            last = entries[-1][0] + 1 if entries else 1
            raise ParseError(f"missing '{name}=' line", last)
        pos += 1
        return entries[pos - 1]

    n = _int_field(take("n"), "n")
    k = _int_field(take("k"), "k")
    if not 0 <= n <= words.MAX_WORD_N or not 0 <= k <= n:
        raise ParseError(f"need 0 <= k <= n <= {words.MAX_WORD_N}, got n={n}, k={k}",
                         entries[pos - 1][0])
    h = _bits_field(take("h"), "h", n)
    v = [_bits_field(take("v"), "v", n) for _ in range(k)]
    d = _bits_field(take("d"), "d", k)
    J = [_bits_field(take("J"), "J", k) for _ in range(k)]
    lineno, value = _field(take("gamma"), "gamma")
    if value == "auto":
        gamma = complex(2.0 ** (-k / 2))
    else:
        parts = value.split()
        try:
            if len(parts) != 2:
                raise ValueError
            gamma = complex(float(parts[0]), float(parts[1]))
        except ValueError:
            raise ParseError(f"gamma must be 'auto' or '<re> <im>', got {value!r}", lineno) from None
    if pos != len(entries):
        raise ParseError(f"unexpected trailing content {entries[pos][1]!r}", entries[pos][0])
    desc = QuadraticFormDesc(n, h, v, d, J, gamma)
    if validate:
        validate_qf(desc)
    return desc


def serialize_qf(desc: QuadraticFormDesc) -> str:
    n, k = desc.n, desc.k
    out = [f"n={n}", f"k={k}", f"h={words.to_bitstring(desc.h, n)}"]
    out += [f"v={words.to_bitstring(x, n)}" for x in desc.v]
    out.append(f"d={words.to_bitstring(desc.d, k)}")
    out += [f"J={words.to_bitstring(row, k)}" for row in desc.J]
    if desc.gamma == complex(2.0 ** (-k / 2)):
        out.append("gamma=auto")
    else:
        out.append(f"gamma={desc.gamma.real!r} {desc.gamma.imag!r}")
    return "\n".join(out) + "\n"


# -- check matrices and tableaux --------------------------------------------

def parse_check(text: str, *, validate: bool = True) -> CheckMatrix:
    rows = []
    n = None
    for lineno, line in _lines(text):
        p = parse_pauli(line, lineno)
        if n is None:
            n = p.n
        elif p.n != n:
            raise LengthMismatch(f"generator has {p.n} letters, expected {n}", lineno)
        if (p.omega - words.popcount(p.w & p.u)) % 2:
            raise BadPhaseToken("check-matrix generators take a '+' or '-' sign", lineno)
        rows.append(p.to_row())
    if n is None:
        raise ParseError("no generators found", 1)
    if len(rows) != n:
        raise LengthMismatch(f"{len(rows)} generators for {n} qubits")
    cm = CheckMatrix(n, rows)
    if validate:
        validate_check(cm)
    return cm


def serialize_check(cm: CheckMatrix) -> str:
    return "".join(format_pauli(p) + "\n" for p in cm.paulis())


_TAB_RE = re.compile(r"^([UV])(\d+)\s+(\S+)$")


def parse_tableau(text: str, *, validate: bool = True) -> CliffordTableau:
    """Lines ``U<t> <pauli>`` / ``V<t> <pauli>``, each t in 1..n exactly once per letter."""
    found: dict[tuple[str, int], PauliOp] = {}
    n = None
    for lineno, line in _lines(text):
        m = _TAB_RE.match(line)
        if not m:
            raise ParseError(f"expected 'U<t> <pauli>' or 'V<t> <pauli>', got {line!r}", lineno)
        which, t, s = m.group(1), int(m.group(2)), m.group(3)
        p = parse_pauli(s, lineno)
        if n is None:
            n = p.n
        elif p.n != n:
            raise LengthMismatch(f"entry has {p.n} letters, expected {n}", lineno)
        if not 1 <= t <= n:
            raise ParseError(f"index {t} outside 1..{n}", lineno)
        if (which, t) in found:
            raise ParseError(f"duplicate entry {which}{t}", lineno)
        found[(which, t)] = p
    if n is None:
        raise ParseError("empty tableau", 1)
    missing = [f"{w}{t}" for w in "UV" for t in range(1, n + 1) if (w, t) not in found]
    if missing:
        raise LengthMismatch(f"missing tableau entries: {', '.join(missing)}")
    tab = CliffordTableau(n, [found[("U", t)] for t in range(1, n + 1)],
                          [found[("V", t)] for t in range(1, n + 1)])
    if validate:
        validate_tableau(tab)
    return tab


def serialize_tableau(tab: CliffordTableau) -> str:
    lines = [f"U{t} {format_pauli(p)}" for t, p in enumerate(tab.U, 1)]
    lines += [f"V{t} {format_pauli(p)}" for t, p in enumerate(tab.V, 1)]
    return "\n".join(lines) + "\n"


# -- dense outputs -----------------------------------------------------------

def _dense_kind(arr):
    if arr.ndim == 1:
        size, kind = arr.shape[0], KIND_STATE
    elif arr.ndim == 2 and arr.shape[0] == arr.shape[1]:
        size, kind = arr.shape[0], KIND_MATRIX
    else:
        raise ValueError(f"expected a vector or square matrix, got shape {arr.shape}")
    if size < 1 or size & (size - 1):
        raise ValueError(f"dimension {size} is not a power of two")
    return kind, size.bit_length() - 1


def write_dense(arr: np.ndarray, mode: str = "binary") -> bytes:
    """Encode a state or matrix; matrices are emitted column by column."""
    arr = np.asarray(arr, dtype=np.complex128)
    kind, n = _dense_kind(arr)
    flat = arr.ravel(order="F")
    if mode == "binary":
        return _HEADER.pack(MAGIC, VERSION, kind, n) + flat.astype("<c16").tobytes()
    if mode != "text":
        raise ValueError(f"mode must be 'text' or 'binary', got {mode!r}")
    size = 1 << n
    re_, im_ = flat.real.tolist(), flat.imag.tolist()
    if kind == KIND_STATE:
        lines = [f"{i} {r!r} {m!r}" for i, (r, m) in enumerate(zip(re_, im_))]
    else:
        lines = [f"{i // size} {i % size} {r!r} {m!r}" for i, (r, m) in enumerate(zip(re_, im_))]
    return ("\n".join(lines) + "\n").encode()


def read_dense(data: bytes) -> np.ndarray:
    """Decode either encoding produced by :func:`write_dense`."""
    if data[:4] == MAGIC:
        if len(data) < _HEADER.size:
            raise ParseError("truncated header")
        _, version, kind, n = _HEADER.unpack_from(data)
        if version != VERSION:
            raise ParseError(f"unsupported format version {version}")
        if kind not in (KIND_STATE, KIND_MATRIX):
            raise ParseError(f"unknown payload kind {kind}")
        count = 1 << (n if kind == KIND_STATE else 2 * n)
        body = data[_HEADER.size:]
        if len(body) != 16 * count:
            raise ParseError(f"payload has {len(body)} bytes, expected {16 * count}")
        flat = np.frombuffer(body, dtype="<c16").astype(np.complex128)
        if kind == KIND_STATE:
            return flat
        return flat.reshape((1 << n, 1 << n), order="F")
    return _read_dense_text(data.decode())


def _read_dense_text(text):
    entries = list(_lines(text))
    if not entries:
        raise ParseError("empty dense file", 1)
    width = len(entries[0][1].split())
    if width not in (3, 4):
        raise ParseError("expected 'index re im' or 'col row re im' lines", entries[0][0])
    count = len(entries)
    size = count if width == 3 else int(round(count ** 0.5))
    if size < 1 or size & (size - 1) or (width == 4 and size * size != count):
        raise LengthMismatch(f"{count} entries do not form a 2^n {'vector' if width == 3 else 'matrix'}")
    out = np.zeros(count, dtype=np.complex128)
    seen = np.zeros(count, dtype=bool)
    for lineno, line in entries:
        parts = line.split()
        if len(parts) != width:
            raise ParseError(f"expected {width} fields", lineno)
        try:
            idx = [int(p) for p in parts[:-2]]
            val = complex(float(parts[-2]), float(parts[-1]))
        except ValueError:
            raise ParseError(f"bad number in {line!r}", lineno) from None
        if any(not 0 <= i < size for i in idx):
            raise ParseError(f"index out of range in {line!r}", lineno)
        pos = idx[0] if width == 3 else idx[0] * size + idx[1]
        if seen[pos]:
            raise ParseError(f"duplicate entry {line!r}", lineno)
        seen[pos] = True
        out[pos] = val
    if width == 3:
        return out
    return out.reshape((size, size), order="F")


def load_any(text: str, kind: str):
    """Parse a compact description by kind name: ``qf``, ``check`` or ``tableau``."""
    parsers = {"qf": parse_qf, "check": parse_check, "tableau": parse_tableau}
    if kind not in parsers:
        raise StabmatError(f"unknown kind {kind!r}")
    return parsers[kind](text)

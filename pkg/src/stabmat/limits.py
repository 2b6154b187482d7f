"""Size caps. These are memory guardrails, not algorithmic limits."""

import os

from .errors import TooLarge

DEFAULT_MAX_N = 26
# dense-oracle caps
EIGENCHECK_MAX_N = 12
CONJUGATION_MAX_N = 8
PAULI_DENSE_MAX_N = 8
NAIVE_MAX_N = 20


def max_state_n() -> int:
    """Largest n for a 2^n state; ``STABMAT_MAX_N`` overrides the default of 26."""
    raw = os.environ.get("STABMAT_MAX_N")
    if raw is None:
        return DEFAULT_MAX_N
    try:
        return int(raw)
    except ValueError:
        raise TooLarge(f"STABMAT_MAX_N={raw!r} is not an integer") from None


def max_matrix_n() -> int:
    # 4^(N/2) == 2^N: same memory budget as the largest state
    return max_state_n() // 2


def require(n: int, cap: int, what: str) -> None:
    if n > cap:
        raise TooLarge(f"{what}: n={n} exceeds the limit {cap} (set STABMAT_MAX_N to raise it)")

"""Output-optimal materialization of stabilizer state vectors and Clifford matrices."""

from .clifford import conjugation_oracle, expand_tableau, first_column, tableau_to_matrix
from .errors import StabmatError
from .model import (
    CheckMatrix,
    CliffordTableau,
    PauliOp,
    QuadraticFormDesc,
    validate_check,
    validate_qf,
    validate_tableau,
)
from .pauli import apply_pauli, apply_pauli_naive, pauli_dense
from .qf_expand import build_interaction, expand, expand_exact, expand_naive
from .reduction import check_to_qf, stabilizer_eigencheck

__version__ = "0.1.0"

__all__ = [
    "CheckMatrix",
    "CliffordTableau",
    "PauliOp",
    "QuadraticFormDesc",
    "StabmatError",
    "apply_pauli",
    "apply_pauli_naive",
    "build_interaction",
    "check_to_qf",
    "conjugation_oracle",
    "expand",
    "expand_exact",
    "expand_naive",
    "expand_tableau",
    "first_column",
    "pauli_dense",
    "stabilizer_eigencheck",
    "tableau_to_matrix",
    "validate_check",
    "validate_qf",
    "validate_tableau",
]

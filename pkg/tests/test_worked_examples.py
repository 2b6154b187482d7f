"""Small hand-checkable input/output pairs, one per documented behavior."""

import numpy as np
import pytest

from stabmat import io, words
from stabmat.clifford import conjugation_oracle, expand_tableau, first_column, tableau_to_matrix
from stabmat.errors import BadCommutation, ParseError
from stabmat.model import CheckMatrix, CliffordTableau, PauliOp, QuadraticFormDesc, validate_tableau
from stabmat.pauli import apply_pauli, pauli_dense
from stabmat.qf_expand import build_interaction, expand_exact
from stabmat.reduction import check_to_qf, stabilizer_eigencheck

SQ = 2 ** -0.5
H = np.array([[1, 1], [1, -1]]) * SQ
HADAMARD = CliffordTableau(1, [PauliOp.x(1, 1)], [PauliOp.z(1, 1)])


def test_gray_prefix():
    assert [words.gray(m) for m in range(4)] == [0, 1, 3, 2]


def test_flip_word_of_power_of_two():
    assert all(words.flip_word(1 << j) == 1 << j for j in range(16))


def test_diagonal_j_only():
    inter = build_interaction(QuadraticFormDesc(2, 0, [1, 2], 0, [0b01, 0b10], 0.5))
    assert inter.a == (2, 2) and inter.B == (0, 0)


def test_exact_walk_small_cases():
    xs, qs = expand_exact(QuadraticFormDesc(1, 0, [1], 1, [0], SQ))
    assert list(zip(xs.tolist(), qs.tolist())) == [(0, 0), (1, 1)]
    xs, qs = expand_exact(QuadraticFormDesc(3, 5, [], 0, [], 1.0))
    assert list(zip(xs.tolist(), qs.tolist())) == [(5, 0)]


class TestPauliAction:
    def test_identity(self):
        psi = np.array([0.3, -1j, 2, 0.5 + 0.5j])
        np.testing.assert_array_equal(apply_pauli(psi, PauliOp(2, 0, 0, 0)), psi)

    def test_x_swaps(self):
        np.testing.assert_array_equal(apply_pauli(np.array([2, 3j]), PauliOp.x(1, 1)), [3j, 2])

    def test_y_on_zero(self):
        np.testing.assert_array_equal(apply_pauli(np.array([1, 0j]), PauliOp(1, 1, 1, 1)), [0, 1j])

    def test_z_on_first_coordinate(self):
        # u = e_1 flips the sign wherever bit 0 of the index is set
        out = apply_pauli(np.ones(4, dtype=complex), PauliOp.z(2, 1))
        np.testing.assert_array_equal(out, [1, -1, 1, -1])
        np.testing.assert_array_equal(apply_pauli(np.ones(2, dtype=complex), PauliOp.z(1, 1)), [1, -1])

    def test_y_matrix(self):
        np.testing.assert_array_equal(pauli_dense(PauliOp(1, 1, 1, 1)), [[0, -1j], [1j, 0]])


class TestReduction:
    @pytest.mark.parametrize("n", [1, 3, 6])
    def test_z_basis(self, n):
        cm = CheckMatrix(n, [(0, 1 << t, 0) for t in range(n)])
        desc = check_to_qf(cm)
        assert (desc.k, desc.h, desc.gamma) == (0, 0, 1)
        psi = np.zeros(1 << n, dtype=complex)
        psi[0] = 1
        assert stabilizer_eigencheck(cm, psi) == 0

    def test_y_eigencheck(self):
        psi = np.array([1, 1j]) * SQ
        assert stabilizer_eigencheck(CheckMatrix(1, [(1, 1, 0)]), psi) <= 1e-15
        residual = stabilizer_eigencheck(CheckMatrix(1, [(1, 1, 1)]), psi)
        assert residual == pytest.approx(2 * SQ)


class TestClifford:
    def test_first_columns(self):
        np.testing.assert_array_equal(first_column(CliffordTableau.identity(2)), [1, 0, 0, 0])
        np.testing.assert_allclose(first_column(HADAMARD), [SQ, SQ], rtol=0, atol=1e-15)
        s_gate = CliffordTableau(1, [PauliOp.z(1, 1)], [PauliOp(1, 1, 1, 1)])
        np.testing.assert_array_equal(first_column(s_gate), [1, 0])

    def test_hadamard_is_exact(self):
        np.testing.assert_allclose(tableau_to_matrix(HADAMARD, np.array([SQ, SQ])), H,
                                   rtol=0, atol=1e-15)
        np.testing.assert_allclose(expand_tableau(HADAMARD), H, rtol=0, atol=1e-15)

    def test_oracle_values(self):
        assert conjugation_oracle(np.eye(4), CliffordTableau.identity(2)) == 0
        assert conjugation_oracle(H, HADAMARD) <= 1e-15
        assert conjugation_oracle(np.eye(2), HADAMARD) >= 1

    def test_u_equals_v(self):
        bad = CliffordTableau(1, [PauliOp.z(1, 1)], [PauliOp.z(1, 1)])
        with pytest.raises(BadCommutation) as info:
            validate_tableau(bad)
        assert info.value.pair == (1, 1)


class TestFormats:
    def test_missing_v_line(self):
        with pytest.raises(ParseError):
            io.parse_qf("n=2\nk=2\nh=00\nv=10\nd=00\nJ=00\nJ=00\ngamma=auto\n")

    def test_y_row(self):
        assert io.parse_check("+Y\n").rows == ((1, 1, 0),)

    def test_cluster_text(self):
        psi = np.array([1, 1, 1, -1]) / 2
        lines = io.write_dense(psi, "text").decode().splitlines()
        assert lines == ["0 0.5 0.0", "1 0.5 0.0", "2 0.5 0.0", "3 -0.5 0.0"]

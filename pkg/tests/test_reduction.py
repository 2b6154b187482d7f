import itertools

import numpy as np
import pytest

from stabmat import instances, io
from stabmat.errors import NonCommutingRows, TooLarge
from stabmat.model import CheckMatrix
from stabmat.qf_expand import expand
from stabmat.reduction import check_to_qf, stabilizer_eigencheck

SQ = 2 ** -0.5
EIGEN = {
    "+Z": np.array([1, 0]), "-Z": np.array([0, 1]),
    "+X": np.array([SQ, SQ]), "-X": np.array([SQ, -SQ]),
    "+Y": np.array([SQ, 1j * SQ]), "-Y": np.array([SQ, -1j * SQ]),
}


def state_of(text):
    cm = io.parse_check(text)
    return cm, expand(check_to_qf(cm))


class TestKnownStates:
    @pytest.mark.parametrize("text", sorted(EIGEN))
    def test_single_qubit(self, text):
        _, psi = state_of(text)
        np.testing.assert_allclose(psi, EIGEN[text], rtol=0, atol=1e-15)

    def test_all_z_is_basis_state(self):
        _, psi = state_of("+ZII\n-IZI\n+IIZ\n")
        expected = np.zeros(8)
        expected[0b010] = 1
        np.testing.assert_array_equal(psi, expected)

    def test_bell(self):
        _, psi = state_of("+ZZ\n+XX\n")
        np.testing.assert_allclose(psi, [SQ, 0, 0, SQ], rtol=0, atol=1e-15)

    def test_cluster(self):
        cm, psi = state_of("+XZ\n+ZX\n")
        np.testing.assert_allclose(psi, [0.5, 0.5, 0.5, -0.5], rtol=0, atol=1e-15)
        desc = check_to_qf(cm)
        assert desc.k == 2 and desc.J == (0b10, 0)

    def test_canonical_description(self):
        desc = check_to_qf(io.parse_check("+Y\n"))
        assert (desc.n, desc.h, desc.v, desc.d, desc.J) == (1, 0, (1,), 1, (0,))
        assert desc.gamma == SQ


class TestEigenvectors:
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_signed_letter_products(self, n):
        # generators sigma_j P_j on qubit j give the kron of single-qubit eigenvectors
        for letters in itertools.product("XYZ", repeat=n):
            for signs in itertools.product("+-", repeat=n):
                gens = []
                expected = np.ones(1, dtype=complex)
                for j, (c, sg) in enumerate(zip(letters, signs)):
                    ops = ["I"] * n
                    ops[j] = c
                    gens.append(sg + "".join(ops))
                    expected = np.kron(EIGEN[sg + c], expected)
                cm = io.parse_check("\n".join(gens))
                psi = expand(check_to_qf(cm))
                np.testing.assert_allclose(psi, expected, rtol=0, atol=1e-15)
                assert stabilizer_eigencheck(cm, psi) <= 1e-12

    def test_random(self, rng):
        for _ in range(100):
            cm = instances.random_check_matrix(int(rng.integers(1, 8)), rng)
            psi = expand(check_to_qf(cm))
            assert stabilizer_eigencheck(cm, psi) <= 1e-12
            assert abs(np.linalg.norm(psi) - 1) <= 1e-12

    def test_flipped_sign_fails_eigencheck(self):
        cm, psi = state_of("+XZ\n+ZX\n")
        (w, u, s), rest = cm.rows[0], cm.rows[1:]
        bad = CheckMatrix(2, [(w, u, 1 - s), *rest])
        # G psi = -psi for the flipped generator
        assert stabilizer_eigencheck(bad, psi) == pytest.approx(2 * np.max(np.abs(psi)))


class TestErrors:
    def test_anticommuting(self):
        with pytest.raises(NonCommutingRows):
            check_to_qf(CheckMatrix(2, [(0b01, 0, 0), (0, 0b01, 0)]))

    def test_eigencheck_cap(self):
        cm = CheckMatrix(13, [(0, 1 << t, 0) for t in range(13)])
        with pytest.raises(TooLarge):
            stabilizer_eigencheck(cm, np.zeros(1 << 13, dtype=complex))

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stabmat import instances
from stabmat.errors import InvariantViolation, TooLarge
from stabmat.model import QuadraticFormDesc
from stabmat.qf_expand import (
    build_interaction,
    expand,
    expand_exact,
    expand_naive,
    phase_exponent,
    phase_table,
    support_point,
    walk_checked,
)

BACKENDS = ("numba", "numpy")
Y_STATE = QuadraticFormDesc(1, 0, [1], 1, [0], 2 ** -0.5)
CLUSTER = QuadraticFormDesc(2, 0, [1, 2], 0, [0b10, 0], 0.5)


@st.composite
def descriptions(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    k = draw(st.integers(0, n))
    seed = draw(st.integers(0, 2**32 - 1))
    echelon = draw(st.booleans())
    return instances.random_qf(n, k, np.random.default_rng(seed), echelon=echelon)


class TestExamples:
    @pytest.mark.parametrize("backend", BACKENDS)
    def test_y_eigenstate(self, backend):
        psi = expand(Y_STATE, backend=backend)
        np.testing.assert_allclose(psi, np.array([1, 1j]) / np.sqrt(2), rtol=0, atol=1e-15)

    @pytest.mark.parametrize("backend", BACKENDS)
    def test_cluster(self, backend):
        psi = expand(CLUSTER, backend=backend)
        np.testing.assert_allclose(psi, [0.5, 0.5, 0.5, -0.5], rtol=0, atol=1e-15)
        xs, qs = expand_exact(CLUSTER, backend=backend)
        assert xs.tolist() == [0, 1, 3, 2]
        assert qs.tolist() == [0, 0, 2, 0]

    def test_interaction_data(self):
        assert build_interaction(Y_STATE).a == (1,)
        inter = build_interaction(CLUSTER)
        assert inter.a == (0, 0)
        assert inter.B == (0b10, 0b01)

    def test_diagonal_of_j_enters_linear_term(self):
        desc = QuadraticFormDesc(1, 0, [1], 1, [1], 2 ** -0.5)
        assert build_interaction(desc).a == (3,)
        np.testing.assert_array_equal(expand(desc), expand_naive(desc))

    def test_k_zero_is_basis_state(self):
        desc = QuadraticFormDesc(3, 0b101, [], 0, [], 1j)
        psi = expand(desc)
        assert psi[0b101] == 1j
        assert np.count_nonzero(psi) == 1

    def test_phase_table_is_exact(self):
        g = complex(0.3, -0.7)
        table = phase_table(g)
        assert table.tolist() == [g, complex(0.7, 0.3), complex(-0.3, 0.7), complex(-0.7, -0.3)]


class TestAgainstOracle:
    @pytest.mark.parametrize("backend", BACKENDS)
    @pytest.mark.parametrize("lookup", ["ctz", "onehot"])
    def test_random(self, rng, backend, lookup):
        for _ in range(60):
            n = int(rng.integers(1, 11))
            desc = instances.random_qf(n, None, rng, echelon=bool(rng.integers(2)))
            np.testing.assert_array_equal(expand(desc, lookup=lookup, backend=backend),
                                          expand_naive(desc, backend="numba"))

    def test_backends_agree_on_naive(self, rng):
        for _ in range(20):
            desc = instances.random_qf(int(rng.integers(1, 9)), None, rng)
            np.testing.assert_array_equal(expand_naive(desc, backend="numpy"),
                                          expand_naive(desc, backend="numba"))

    @settings(max_examples=150, deadline=None)
    @given(descriptions())
    def test_closed_form(self, desc):
        psi = expand(desc)
        table = phase_table(desc.gamma)
        expected = np.zeros(1 << desc.n, dtype=complex)
        for y in range(1 << desc.k):
            expected[support_point(desc, y)] = table[phase_exponent(desc, y)]
        np.testing.assert_array_equal(psi, expected)

    @settings(max_examples=100, deadline=None)
    @given(descriptions())
    def test_norm_and_support(self, desc):
        psi = expand(desc)
        assert np.count_nonzero(psi) == 1 << desc.k
        assert abs(np.linalg.norm(psi) - 1) < 1e-12

    def test_exact_trace_matches_vector(self, rng):
        for backend in BACKENDS:
            desc = instances.random_qf(7, 5, rng, gamma=0.25 - 0.5j)
            xs, qs = expand_exact(desc, backend=backend)
            assert sorted(xs.tolist()) == sorted(set(xs.tolist()))
            np.testing.assert_array_equal(expand(desc)[xs], phase_table(desc.gamma)[qs])


class TestOutputBuffer:
    def test_reused_buffer_is_rezeroed(self, rng):
        a = instances.random_qf(6, 6, rng)
        b = instances.random_qf(6, 2, rng)
        out = np.empty(64, dtype=complex)
        expand(a, out)
        assert expand(b, out) is out
        np.testing.assert_array_equal(out, expand_naive(b))

    def test_wrong_buffer(self):
        with pytest.raises(ValueError):
            expand(CLUSTER, np.zeros(3, dtype=complex))

    def test_size_cap(self):
        big = QuadraticFormDesc(40, 0, [], 0, [], 1.0)
        with pytest.raises(TooLarge):
            expand(big)

    def test_cap_override(self, monkeypatch):
        monkeypatch.setenv("STABMAT_MAX_N", "4")
        with pytest.raises(TooLarge):
            expand(QuadraticFormDesc(5, 0, [], 0, [], 1.0))

    def test_bad_lookup(self):
        with pytest.raises(ValueError):
            expand(CLUSTER, lookup="table")


class TestCheckedWalk:
    def test_matches_fast_path(self, rng):
        for _ in range(40):
            desc = instances.random_qf(int(rng.integers(1, 8)), None, rng)
            np.testing.assert_array_equal(walk_checked(desc), expand(desc))

    def test_detects_wrong_parity_update(self, monkeypatch):
        import stabmat.qf_expand as qf

        real = qf.build_interaction

        def broken(desc):
            inter = real(desc)
            return qf.InteractionData(inter.a, (0,) * desc.k)

        monkeypatch.setattr(qf, "build_interaction", broken)
        with pytest.raises(InvariantViolation):
            walk_checked(CLUSTER)

    def test_detects_wrong_linear_term(self, monkeypatch):
        import stabmat.qf_expand as qf

        monkeypatch.setattr(qf, "build_interaction",
                            lambda desc: qf.InteractionData((0,), (0,)))
        with pytest.raises(InvariantViolation, match="increment"):
            walk_checked(Y_STATE)

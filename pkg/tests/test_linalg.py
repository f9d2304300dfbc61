import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wernerlab import linalg, states
from wernerlab.errors import (
    DimensionMismatchError,
    DimensionOverflowError,
    NonHermitianError,
    NotDensityMatrixError,
)


def rand_hermitian(dim, seed):
    rng = np.random.default_rng(seed)
    a = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    return (a + a.conj().T) / 2


def rand_density(dim, seed):
    return linalg.random_density_matrix(dim, np.random.default_rng(seed))


class TestEigh:
    def test_identity(self):
        dec = linalg.eigh(np.eye(2))
        assert np.allclose(dec.eigenvalues, [1.0, 1.0])

    def test_diagonal_sorted_ascending(self):
        dec = linalg.eigh(np.diag([3.0, 1.0]))
        assert np.allclose(dec.eigenvalues, [1.0, 3.0])

    def test_flip_operator_spectrum(self):
        # swap on two qubits: one antisymmetric direction, three symmetric
        dec = linalg.eigh(states.flip_operator(2))
        assert np.allclose(dec.eigenvalues, [-1.0, 1.0, 1.0, 1.0], atol=1e-12)

    def test_rejects_non_hermitian(self):
        with pytest.raises(NonHermitianError):
            linalg.eigh(np.array([[0.0, 1.0], [0.0, 0.0]]))

    @pytest.mark.parametrize("dim", [2, 3, 7, 16, 25, 36])
    def test_reconstruction_and_unitarity(self, dim):
        a = rand_hermitian(dim, seed=dim)
        dec = linalg.eigh(a)
        v, w = dec.eigenvectors, dec.eigenvalues
        assert np.abs((v * w) @ v.conj().T - a).max() <= 1e-10
        assert np.abs(v.conj().T @ v - np.eye(dim)).max() <= 1e-10

    def test_deterministic(self):
        a = rand_hermitian(9, seed=5)
        d1, d2 = linalg.eigh(a), linalg.eigh(a)
        assert np.array_equal(d1.eigenvalues, d2.eigenvalues)
        assert np.array_equal(d1.eigenvectors, d2.eigenvectors)


class TestTensorProduct:
    def test_identities(self):
        assert np.array_equal(
            linalg.tensor_product(np.eye(2), np.eye(2)), np.eye(4)
        )

    def test_projector_product(self):
        out = linalg.tensor_product(np.diag([1.0, 0.0]), np.diag([0.0, 1.0]))
        assert np.allclose(out, np.diag([0.0, 1.0, 0.0, 0.0]))

    def test_index_convention(self):
        a = np.arange(4.0).reshape(2, 2)
        b = np.arange(9.0).reshape(3, 3)
        out = linalg.tensor_product(a, b)
        for i, j, k, l in [(0, 1, 2, 0), (1, 0, 1, 2)]:
            assert out[i * 3 + k, j * 3 + l] == a[i, j] * b[k, l]

    def test_werner_power_spectrum_against_eigh(self):
        # two-class spectrum of a tensor square: values {a+^2, a+a-, a-^2}
        # with multiplicities {9, 6, 1} at d = 2
        for eta in (0.5, 0.6):
            w = states.werner_state(eta, 2)
            (ap, mp), (am, mm) = states.werner_spectrum(eta, 2).classes
            assert (mp, mm) == (3, 1)
            expected = np.sort(
                np.concatenate(
                    [np.full(9, ap * ap), np.full(6, ap * am), np.full(1, am * am)]
                )
            )
            got = linalg.eigh(linalg.tensor_product(w, w)).eigenvalues
            assert np.abs(got - expected).max() <= 1e-12

    def test_dimension_cap(self):
        with pytest.raises(DimensionOverflowError):
            linalg.tensor_product(np.eye(70), np.eye(70))


class TestPartialTranspose:
    def test_product_state(self):
        rho = rand_density(3, 1)
        sigma = rand_density(3, 2)
        out = linalg.partial_transpose(linalg.tensor_product(rho, sigma), 3)
        assert np.abs(out - linalg.tensor_product(rho, sigma.T)).max() <= 1e-14

    @pytest.mark.parametrize("d", [2, 3, 4])
    def test_involution(self, d):
        a = rand_hermitian(d * d, seed=d)
        out = linalg.partial_transpose(linalg.partial_transpose(a, d), d)
        assert np.abs(out - a).max() <= 1e-14

    @pytest.mark.parametrize("d", [2, 3, 4])
    def test_flip_maps_to_entangled_operator(self, d):
        got = linalg.partial_transpose(states.flip_operator(d), d)
        assert np.abs(got - states.max_entangled_operator(d)).max() <= 1e-13

    @pytest.mark.parametrize("d", [2, 3])
    @pytest.mark.parametrize("alpha", [0.0, 0.3, 1.0])
    def test_werner_pt_is_isotropic_below_one(self, alpha, d):
        got = linalg.partial_transpose(states.werner_state(alpha, d), d)
        assert np.abs(got - states.isotropic_state(alpha, d)).max() <= 1e-12

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            linalg.partial_transpose(np.eye(6), 2)


class TestDensityMatrixValidation:
    def test_accepts_valid(self):
        linalg.check_density_matrix(rand_density(4, 3))

    def test_rejects_non_hermitian(self):
        bad = np.array([[0.5, 0.5], [0.0, 0.5]])
        with pytest.raises(NonHermitianError):
            linalg.check_density_matrix(bad)

    def test_rejects_wrong_trace(self):
        with pytest.raises(NotDensityMatrixError):
            linalg.check_density_matrix(np.eye(2))

    def test_rejects_negative_eigenvalue(self):
        with pytest.raises(NotDensityMatrixError):
            linalg.check_density_matrix(np.diag([1.5, -0.5]))

    def test_tolerates_clamp_range(self):
        linalg.check_density_matrix(np.diag([1.0 + 5e-11, -5e-11]))


class TestBuresFidelity:
    def test_self_fidelity(self):
        rho = rand_density(4, 7)
        assert linalg.bures_fidelity_numeric(rho, rho) == pytest.approx(1.0, abs=1e-12)

    def test_orthogonal_pure_states(self):
        zero = np.diag([1.0, 0.0])
        one = np.diag([0.0, 1.0])
        assert linalg.bures_fidelity_numeric(zero, one) == pytest.approx(0.0, abs=1e-12)

    def test_werner_pair_matches_closed_form(self):
        got = linalg.bures_fidelity_numeric(
            states.werner_state(0.5, 3), states.werner_state(0.0, 3)
        )
        assert got == pytest.approx((math.sqrt(1.5) + math.sqrt(0.5)) / 2, abs=1e-10)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            linalg.bures_fidelity_numeric(np.eye(2) / 2, np.eye(3) / 3)

    @given(st.integers(0, 2**32 - 1), st.integers(2, 6))
    @settings(max_examples=60, deadline=None)
    def test_symmetric(self, seed, dim):
        rho = rand_density(dim, seed)
        sigma = rand_density(dim, seed + 1)
        f1 = linalg.bures_fidelity_numeric(rho, sigma)
        f2 = linalg.bures_fidelity_numeric(sigma, rho)
        assert abs(f1 - f2) <= 1e-10

    @given(st.integers(0, 2**32 - 1), st.integers(2, 6))
    @settings(max_examples=60, deadline=None)
    def test_fuchs_van_de_graaf(self, seed, dim):
        rho = rand_density(dim, seed)
        sigma = rand_density(dim, seed + 1)
        f = linalg.bures_fidelity_numeric(rho, sigma)
        d = linalg.trace_distance_numeric(rho, sigma)
        assert 1.0 - f <= d + 1e-10
        assert d <= math.sqrt(max(0.0, 1.0 - f * f)) + 1e-10


class TestTraceDistance:
    def test_self_distance(self):
        rho = rand_density(3, 11)
        assert linalg.trace_distance_numeric(rho, rho) == pytest.approx(0.0, abs=1e-14)

    def test_orthogonal_pure_states(self):
        assert linalg.trace_distance_numeric(
            np.diag([1.0, 0.0]), np.diag([0.0, 1.0])
        ) == pytest.approx(1.0, abs=1e-14)

    @pytest.mark.parametrize("d", [2, 3, 4, 5])
    def test_werner_pair_half_parameter_gap(self, d):
        for eta, zeta in [(-1.0, 1.0), (0.5, 0.0), (0.3, -0.8)]:
            got = linalg.trace_distance_numeric(
                states.werner_state(eta, d), states.werner_state(zeta, d)
            )
            assert got == pytest.approx(abs(eta - zeta) / 2, abs=1e-12)


class TestRelativeEntropy:
    def test_self_entropy(self):
        rho = rand_density(4, 13)
        assert linalg.relative_entropy_numeric(rho, rho) == pytest.approx(0.0, abs=1e-12)

    @pytest.mark.parametrize("d", [2, 3, 4])
    def test_werner_pair_value(self, d):
        expected = 0.75 * math.log2(1.5) + 0.25 * math.log2(0.5)
        got = linalg.relative_entropy_numeric(
            states.werner_state(0.5, d), states.werner_state(0.0, d)
        )
        assert got == pytest.approx(expected, abs=1e-12)

    def test_support_mismatch_is_inf(self):
        got = linalg.relative_entropy_numeric(
            states.werner_state(0.0, 3), states.werner_state(1.0, 3)
        )
        assert got == math.inf


class TestQcbNumeric:
    def test_identical_states(self):
        rho = states.werner_state(0.3, 4)
        assert linalg.qcb_numeric(rho, rho).q == pytest.approx(1.0, abs=1e-12)
        # the whole overlap curve is flat at 1
        grid = np.arange(1, 200) * 0.005
        assert np.abs(linalg.qcb_curve(rho, rho, grid) - 1.0).max() <= 1e-12

    def test_antisymmetric_pair(self):
        got = linalg.qcb_numeric(
            states.werner_state(0.5, 2), states.werner_state(-0.5, 2)
        )
        assert got.q == pytest.approx(math.sqrt(0.75), abs=1e-9)
        assert got.s_star == pytest.approx(0.5, abs=1e-6)

    @given(st.integers(0, 2**32 - 1), st.integers(2, 4))
    @settings(max_examples=25, deadline=None)
    def test_swap_symmetry(self, seed, dim):
        rho = rand_density(dim, seed)
        sigma = rand_density(dim, seed + 1)
        fwd = linalg.qcb_numeric(rho, sigma)
        rev = linalg.qcb_numeric(sigma, rho)
        assert abs(fwd.q - rev.q) <= 1e-7
        assert abs(fwd.s_star + rev.s_star - 1.0) <= 1e-6


class TestGoldenSection:
    def test_quadratic(self):
        assert linalg.golden_section_min(lambda x: (x - 0.3) ** 2, 0.0, 1.0) == pytest.approx(
            0.3, abs=1e-7
        )

    def test_requires_ordered_bracket(self):
        with pytest.raises(ValueError):
            linalg.golden_section_min(lambda x: x, 1.0, 0.0)

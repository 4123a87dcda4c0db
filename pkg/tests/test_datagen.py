"""
Unit tests for synthetic data generation.
"""

import numpy as np
import pytest
from scipy import stats

from lingam_discovery.config import GeneratorConfig
from lingam_discovery.datagen import generate, nongaussian_noise, random_model, reference_model, simulate
from lingam_discovery.errors import InvalidDataError
from lingam_discovery.models import ConnectionMatrix, GroundTruthModel


class TestNonGaussianNoise:
    """Test the power-transformed gaussian disturbances."""

    def test_standardised(self):
        """Test sample mean 0 and variance 1 hold exactly."""
        e = nongaussian_noise(5000, 1.7, np.random.default_rng(0))
        assert abs(e.mean()) < 1e-12
        assert abs(e.var() - 1.0) < 1e-12

    def test_exponent_controls_kurtosis(self):
        """Test exponents below 1 are sub-gaussian and above 1 super-gaussian."""
        rng = np.random.default_rng(1)
        sub = nongaussian_noise(100_000, 0.5, rng)
        sup = nongaussian_noise(100_000, 2.0, rng)
        assert stats.kurtosis(sub) < -0.3
        assert stats.kurtosis(sup) > 1.0

    def test_single_sample_is_zero(self):
        """Test a single sample has nothing to standardise."""
        assert nongaussian_noise(1, 2.0, np.random.default_rng(0)).tolist() == [0.0]

    def test_invalid_arguments(self):
        """Test non-positive sizes and exponents are rejected."""
        rng = np.random.default_rng(0)
        with pytest.raises(ValueError):
            nongaussian_noise(0, 2.0, rng)
        with pytest.raises(ValueError):
            nongaussian_noise(10, 0.0, rng)


class TestRandomModel:
    """Test random ground-truth networks."""

    def test_strictly_lower_triangular(self):
        """Test generation-order B has no entries on or above the diagonal."""
        model = random_model(GeneratorConfig(n=6, seed=3))
        assert np.all(np.triu(model.b_true.b) == 0.0)
        nonzero = np.abs(model.b_true.b[np.tril_indices(6, k=-1)])
        assert np.all((nonzero >= 0.2) & (nonzero <= 2.0))

    def test_full_sparsity_gives_empty_graph(self):
        """Test sparsity 1 removes every edge."""
        model = random_model(GeneratorConfig(n=5, sparsity=1.0, seed=0))
        assert model.b_true.edges() == []

    def test_sparsity_sets_zero_fraction(self):
        """Test about half the eligible entries are zero over 1000 draws at sparsity 0.5."""
        eligible = np.tril_indices(5, k=-1)
        zeros = [
            np.count_nonzero(random_model(GeneratorConfig(n=5, sparsity=0.5, seed=k)).b_true.b[eligible] == 0.0)
            for k in range(1000)
        ]
        fraction = sum(zeros) / (1000 * len(eligible[0]))
        assert abs(fraction - 0.5) < 0.05

    def test_exponents_avoid_one(self):
        """Test exponents are drawn from the two configured intervals."""
        model = random_model(GeneratorConfig(n=50, seed=11))
        e = model.exponents
        assert np.all(((e >= 0.5) & (e <= 0.8)) | ((e >= 1.2) & (e <= 2.0)))

    def test_gaussian_family(self):
        """Test the gaussian control family uses exponent 1 everywhere."""
        model = random_model(GeneratorConfig(n=4, disturbance="gaussian", seed=2))
        assert model.exponents.tolist() == [1.0] * 4

    def test_deterministic(self):
        """Test the same seed gives the same model."""
        a = random_model(GeneratorConfig(n=5, sparsity=0.3, seed=21))
        b = random_model(GeneratorConfig(n=5, sparsity=0.3, seed=21))
        assert np.array_equal(a.b_true.b, b.b_true.b)
        assert a.shuffle == b.shuffle
        assert np.array_equal(a.exponents, b.exponents)

    def test_observed_names_in_row_order(self):
        """Test observed rows are named x1..xn."""
        model = random_model(GeneratorConfig(n=5, seed=8))
        data = generate(model, 100, np.random.default_rng(0))
        assert data.variable_names == ("x1", "x2", "x3", "x4", "x5")


class TestSimulation:
    """Test forward simulation and shuffling."""

    @pytest.fixture
    def model(self):
        """A random dense model."""
        return random_model(GeneratorConfig(n=5, seed=4))

    def test_structural_equations_hold(self, model):
        """Test x = Bx + e + c in generation order."""
        sim = simulate(model, 500, np.random.default_rng(0))
        rhs = model.b_true.b @ sim.values + sim.disturbances + model.constants[:, None]
        assert np.allclose(sim.values, rhs, atol=1e-12)

    def test_disturbance_variances(self, model):
        """Test disturbances carry the configured variances exactly."""
        sim = simulate(model, 2000, np.random.default_rng(1))
        assert np.allclose(sim.disturbances.var(axis=1), model.variances, rtol=1e-12)

    def test_generate_applies_shuffle(self, model):
        """Test observed row k is generation row shuffle[k]."""
        sim = simulate(model, 300, np.random.default_rng(5))
        data = generate(model, 300, np.random.default_rng(5))
        assert np.array_equal(data.values, sim.values[list(model.shuffle)])

    def test_mixing_matrix(self, model):
        """Test x - c = A e with A = (I - B)^-1."""
        sim = simulate(model, 200, np.random.default_rng(2))
        centered = sim.values - model.constants[:, None]
        assert np.allclose(centered, model.mixing_matrix() @ sim.disturbances, atol=1e-9)


class TestReferenceModel:
    """Test the fixed four-variable reference network."""

    def test_edges(self):
        """Test the four edges in observed indexing."""
        model = reference_model()
        b = model.observed_b()
        # observed order x1, x2, x3, x4
        assert b[0, 3] == 1.0
        assert b[1, 3] == 0.2
        assert b[2, 0] == -5.0
        assert b[2, 1] == -2.0
        assert np.count_nonzero(b) == 4

    def test_true_order_starts_with_x4(self):
        """Test the generation order in observed indices."""
        assert reference_model().true_order() == (3, 0, 1, 2)

    def test_observed_views(self):
        """Test observed parameter views follow the shuffle."""
        model = reference_model(exponents=(2.0, 0.5, 1.8, 0.6))
        assert model.observed_exponents().tolist() == [0.5, 1.8, 0.6, 2.0]
        assert model.observed_variances().tolist() == [1.0] * 4
        assert model.observed_constants().tolist() == [0.0] * 4


class TestGroundTruthModelValidation:
    """Test ground-truth invariants."""

    def test_rejects_upper_entries(self):
        """Test a cyclic or upper-triangular B is rejected."""
        b = np.array([[0.0, 1.0], [0.0, 0.0]])
        with pytest.raises(InvalidDataError):
            GroundTruthModel(
                b_true=ConnectionMatrix(b=b),
                constants=np.zeros(2),
                variances=np.ones(2),
                exponents=np.ones(2),
            )

    def test_rejects_bad_shuffle(self):
        """Test shuffle must be a permutation."""
        with pytest.raises(InvalidDataError):
            GroundTruthModel(
                b_true=ConnectionMatrix(b=np.zeros((2, 2))),
                constants=np.zeros(2),
                variances=np.ones(2),
                exponents=np.ones(2),
                shuffle=(0, 0),
            )

    def test_rejects_non_positive_variance(self):
        """Test disturbance variances must be positive."""
        with pytest.raises(InvalidDataError):
            GroundTruthModel(
                b_true=ConnectionMatrix(b=np.zeros((2, 2))),
                constants=np.zeros(2),
                variances=np.array([1.0, 0.0]),
                exponents=np.ones(2),
            )

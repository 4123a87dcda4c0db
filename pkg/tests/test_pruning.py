"""
Unit tests for OLS re-estimation and bootstrap pruning.
"""

import numpy as np
import pytest

from lingam_discovery.config import GeneratorConfig, PruneConfig
from lingam_discovery.datagen import generate, random_model, reference_model
from lingam_discovery.errors import BootstrapInstabilityError, DegenerateDataError, InvalidDataError
from lingam_discovery.models import CausalOrder, DataMatrix, EdgeVerdict
from lingam_discovery.pruning import bootstrap_prune, edge_verdicts, regress_on_predecessors

REFERENCE_ORDER = CausalOrder(order=(3, 0, 1, 2), residual=0.0)


@pytest.fixture(scope="module")
def reference_data():
    """Reference-network data, m=10000."""
    return generate(reference_model(), 10_000, np.random.default_rng(11))


class TestRegression:
    """Test covariance-only OLS on predecessors."""

    def test_recovers_reference_coefficients(self, reference_data):
        """Test OLS under the true order recovers B."""
        b = regress_on_predecessors(reference_data, REFERENCE_ORDER)
        assert np.max(np.abs(b.b - reference_model().observed_b())) < 0.1

    def test_root_row_is_zero(self, reference_data):
        """Test the first variable in the order has no parents."""
        b = regress_on_predecessors(reference_data, REFERENCE_ORDER)
        assert np.all(b.b[3] == 0.0)

    def test_respects_order(self, reference_data):
        """Test no coefficient points against the order."""
        b = regress_on_predecessors(reference_data, REFERENCE_ORDER)
        assert np.all(b.b[~REFERENCE_ORDER.precedes_mask()] == 0.0)

    def test_collinear_predecessors(self):
        """Test a duplicated predecessor is degenerate and named."""
        rng = np.random.default_rng(0)
        x = rng.uniform(size=500)
        data = DataMatrix(values=np.vstack([x, x, rng.uniform(size=500)]), variable_names=("a", "b", "c"))
        with pytest.raises(DegenerateDataError) as exc:
            regress_on_predecessors(data, CausalOrder(order=(0, 1, 2), residual=0.0))
        assert exc.value.variable == "c"

    def test_order_mismatch(self, reference_data):
        """Test the order must cover the data's variables."""
        with pytest.raises(InvalidDataError):
            regress_on_predecessors(reference_data, CausalOrder(order=(0, 1, 2), residual=0.0))


class TestEdgeVerdicts:
    """Test the keep/prune rule."""

    def test_rule(self):
        """Test kept iff |mean| > z * std, forced zero against the order."""
        means = np.array([[0.0, 0.0, 0.0], [1.0, 0.0, 0.0], [0.1, 0.5, 0.0]])
        stds = np.array([[0.0, 0.0, 0.0], [0.1, 0.0, 0.0], [0.1, 0.0, 0.0]])
        order = CausalOrder(order=(0, 1, 2), residual=0.0)
        v = edge_verdicts(means, stds, order, 2.0)
        assert v[1][0] == EdgeVerdict.KEPT
        assert v[2][0] == EdgeVerdict.PRUNED
        # zero spread keeps any nonzero mean
        assert v[2][1] == EdgeVerdict.KEPT
        assert v[0][1] == EdgeVerdict.FORCED_ZERO
        assert v[1][1] == EdgeVerdict.FORCED_ZERO


class TestBootstrapPrune:
    """Test bootstrap pruning end to end."""

    def test_true_edges_kept(self, reference_data):
        """Test the four reference edges survive pruning."""
        report = bootstrap_prune(reference_data, REFERENCE_ORDER, PruneConfig(resamples=50, seed=1))
        for i, j in ((0, 3), (1, 3), (2, 0), (2, 1)):
            assert report.verdicts[i][j] == EdgeVerdict.KEPT
            assert report.kept.b[i, j] == report.edge_means[i, j]
        assert report.failures == 0

    def test_zero_threshold_prunes_nothing(self, reference_data):
        """Test z=0 keeps every edge the order allows."""
        report = bootstrap_prune(reference_data, REFERENCE_ORDER, PruneConfig(resamples=20, z_threshold=0.0))
        assert report.count(EdgeVerdict.PRUNED) == 0
        assert report.count(EdgeVerdict.KEPT) == 6

    def test_higher_threshold_keeps_fewer(self, reference_data):
        """Test the kept set shrinks as z grows."""
        low = bootstrap_prune(reference_data, REFERENCE_ORDER, PruneConfig(resamples=30, z_threshold=0.0))
        high = bootstrap_prune(reference_data, REFERENCE_ORDER, PruneConfig(resamples=30, z_threshold=3.0))
        assert high.count(EdgeVerdict.KEPT) <= low.count(EdgeVerdict.KEPT)

    def test_sparse_model_prunes_at_least_as_many(self):
        """Test a sparse network ends with no more edges than a dense one."""
        dense = random_model(GeneratorConfig(n=4, sparsity=0.0, seed=6))
        sparse = random_model(GeneratorConfig(n=4, sparsity=0.7, seed=6))
        kept = []
        for model in (dense, sparse):
            data = generate(model, 5000, np.random.default_rng(0))
            order = CausalOrder(order=model.true_order(), residual=0.0)
            report = bootstrap_prune(data, order, PruneConfig(resamples=30))
            kept.append(report.count(EdgeVerdict.KEPT))
        assert kept[1] <= kept[0]

    def test_workers_do_not_change_results(self, reference_data):
        """Test per-resample seeds make threading invisible."""
        serial = bootstrap_prune(reference_data, REFERENCE_ORDER, PruneConfig(resamples=16, seed=3))
        threaded = bootstrap_prune(reference_data, REFERENCE_ORDER, PruneConfig(resamples=16, seed=3, workers=4))
        assert np.array_equal(serial.edge_means, threaded.edge_means)
        assert np.array_equal(serial.edge_stds, threaded.edge_stds)

    def test_order_mismatch(self, reference_data):
        """Test a mismatched order is rejected."""
        with pytest.raises(InvalidDataError):
            bootstrap_prune(reference_data, CausalOrder(order=(0, 1), residual=0.0))

    def test_unstable_resamples(self):
        """Test collinear data fails every resample."""
        rng = np.random.default_rng(4)
        x = rng.uniform(size=300)
        data = DataMatrix(values=np.vstack([x, 3.0 * x, rng.uniform(size=300)]))
        with pytest.raises(BootstrapInstabilityError) as exc:
            bootstrap_prune(data, CausalOrder(order=(0, 1, 2), residual=0.0), PruneConfig(resamples=10))
        assert exc.value.failures == 10


@pytest.mark.slow
class TestPruningQuality:
    """Full-size check of edge recovery on sparse networks."""

    def test_sparse_networks_keep_edges_and_prune_zeros(self):
        """Test true edges survive and true zeros are pruned under the true order."""
        kept_edges = true_edges = pruned_zeros = true_zeros = 0
        for t in range(20):
            model = random_model(GeneratorConfig(n=5, sparsity=0.5, coefficient_range=(0.5, 2.0), seed=t))
            data = generate(model, 10_000, np.random.default_rng(t))
            order = CausalOrder(order=model.true_order(), residual=0.0)
            report = bootstrap_prune(data, order)
            b = model.observed_b()
            position = {v: p for p, v in enumerate(order.order)}
            for i in range(5):
                for j in range(5):
                    if position[j] >= position[i]:
                        continue
                    verdict = report.verdicts[i][j]
                    if b[i, j] != 0.0:
                        true_edges += 1
                        kept_edges += verdict == EdgeVerdict.KEPT
                    else:
                        true_zeros += 1
                        pruned_zeros += verdict == EdgeVerdict.PRUNED
        assert kept_edges >= 0.9 * true_edges
        assert pruned_zeros >= 0.8 * true_zeros

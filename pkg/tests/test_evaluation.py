"""
Unit tests for the synthetic-data experiment.
"""

import math

import numpy as np
import pytest

from lingam_discovery import discover, estimate
from lingam_discovery.config import GeneratorConfig, RunConfig, load_run_config_from_dict
from lingam_discovery.datagen import generate, random_model
from lingam_discovery.errors import ConvergenceError
from lingam_discovery.evaluation import (
    ScatterRecord,
    align_to_ground_truth,
    order_is_correct,
    run_experiment,
    scatter_fit,
    scatter_records,
    summarize_cell,
    trial_plans,
)
from lingam_discovery.lingam.testing import discover_from_unmixing
from lingam_discovery.models import GroundTruthModel


def sweep(**experiment) -> RunConfig:
    return load_run_config_from_dict({"experiment": experiment})


def exact_result(model: GroundTruthModel):
    return discover_from_unmixing(np.eye(model.n) - model.observed_b())


class TestAlignment:
    """Test undoing the hidden shuffle."""

    def test_exact_estimate_aligns_to_truth(self):
        """Test an exact estimate maps back onto B in generation order."""
        model = random_model(GeneratorConfig(n=5, seed=2))
        aligned = align_to_ground_truth(model, exact_result(model))
        assert np.array_equal(aligned, model.b_true.b)
        assert order_is_correct(model, exact_result(model))

    def test_records_cover_off_diagonal_pairs(self):
        """Test one record per ordered pair i != j, true zeros included."""
        model = random_model(GeneratorConfig(n=4, sparsity=0.5, seed=3))
        records = scatter_records(model, exact_result(model), trial=7, m=100)
        assert len(records) == 12
        assert {(r.i, r.j) for r in records} == {(i, j) for i in range(4) for j in range(4) if i != j}
        assert all(r.b_true == r.b_est for r in records)
        assert all(r.trial == 7 and r.m == 100 and r.n == 4 for r in records)

    def test_wrong_order_detected(self):
        """Test an estimate with a reversed edge is not a correct order."""
        model = random_model(GeneratorConfig(n=3, seed=4))
        b = model.observed_b().T.copy()
        wrong = discover_from_unmixing(np.eye(3) - b)
        assert not order_is_correct(model, wrong)

    def test_alignment_uses_known_shuffle(self):
        """Test estimates are re-indexed entrywise, whatever their size."""
        model = random_model(GeneratorConfig(n=3, seed=9))
        doubled = discover_from_unmixing(np.eye(3) - 2.0 * model.observed_b())
        assert np.array_equal(align_to_ground_truth(model, doubled), 2.0 * model.b_true.b)


class TestSummary:
    """Test per-cell statistics."""

    def test_perfect_fit(self):
        """Test estimates on the diagonal give slope 1 and R^2 1."""
        records = [ScatterRecord(0, 3, 100, 1, 0, v, v) for v in (0.0, 0.5, -1.0, 2.0)]
        slope, r2 = scatter_fit(records)
        assert slope == pytest.approx(1.0)
        assert r2 == pytest.approx(1.0)

    def test_undefined_fit(self):
        """Test constant truth or too few points give nan."""
        flat = [ScatterRecord(0, 3, 100, 1, 0, 0.0, v) for v in (0.1, -0.1)]
        assert all(math.isnan(v) for v in scatter_fit(flat))
        assert all(math.isnan(v) for v in scatter_fit(flat[:1]))

    def test_unreliable_cell(self):
        """Test more than the allowed fraction of failures marks a cell."""
        records = [ScatterRecord(0, 2, 50, 1, 0, 1.0, 0.8), ScatterRecord(0, 2, 50, 0, 1, 0.0, 0.1)]
        cell = summarize_cell(2, 50, records, trials=10, failures=3, correct_orders=7, failure_fraction=0.2)
        assert cell.unreliable
        assert cell.order_accuracy == 1.0
        assert cell.max_abs_error == pytest.approx(0.2)
        ok = summarize_cell(2, 50, records, trials=10, failures=2, correct_orders=7, failure_fraction=0.2)
        assert not ok.unreliable


class TestRunExperiment:
    """Test the sweep."""

    def test_trial_plans_cycle_sparsity(self):
        """Test trial t uses sparsity level t modulo the number of levels."""
        plans = trial_plans(sweep(n_values=[3], m_values=[100], trials=4, sparsities=[0.0, 0.5]))
        assert [s.sparsity for s in plans] == [0.0, 0.5, 0.0, 0.5]

    def test_small_sweep(self):
        """Test records, sorting and the cell summary."""
        result = run_experiment(sweep(n_values=[3], m_values=[2000], trials=3))
        assert len(result.records) == 3 * 6
        keys = [r.sort_key() for r in result.records]
        assert keys == sorted(keys)
        (cell,) = result.cells
        assert (cell.n, cell.m, cell.trials) == (3, 2000, 3)
        assert cell.failures == 0
        assert cell.r2 > 0.8

    def test_reproducible_and_thread_independent(self):
        """Test the outcome is a function of seed and sweep only."""
        a = run_experiment(sweep(n_values=[3], m_values=[500], trials=2, seed=5))
        b = run_experiment(sweep(n_values=[3], m_values=[500], trials=2, seed=5, workers=2))
        assert a.records == b.records
        assert a.cells == b.cells

    def test_zero_trials(self):
        """Test an empty sweep produces no records."""
        result = run_experiment(sweep(n_values=[3], m_values=[100], trials=0))
        assert result.records == ()
        (cell,) = result.cells
        assert cell.trials == 0
        assert not cell.unreliable
        assert math.isnan(cell.slope)

    def test_failing_trials_recorded(self):
        """Test trials above the search limit fail and mark the cell."""
        result = run_experiment(sweep(n_values=[9], m_values=[300], trials=2))
        (cell,) = result.cells
        assert cell.failures == 2
        assert cell.unreliable
        assert all(o.failed for o in result.outcomes)
        assert result.records == ()

    def test_too_few_samples_skips_cell(self):
        """Test a cell with fewer samples than variables fails its trials without aborting the sweep."""
        result = run_experiment(sweep(n_values=[5, 3], m_values=[3, 500], trials=2))
        cells = {(c.n, c.m): c for c in result.cells}
        assert cells[(5, 3)].failures == 2
        assert cells[(5, 3)].unreliable
        assert cells[(3, 500)].failures == 0
        assert len(result.cells) == 4
        assert all("InvalidDataError" in o.error for o in result.outcomes if o.plan.m < o.plan.n)
        assert any(r.n == 3 and r.m == 500 for r in result.records)


@pytest.mark.slow
class TestDeskScaleReproduction:
    """Full-size checks of estimation accuracy."""

    def test_accuracy_grows_with_sample_size(self):
        """Test the large-sample cells sit on the diagonal and small ones scatter more."""
        result = run_experiment(sweep(n_values=[3, 5, 8], m_values=[200, 1000, 10_000], trials=20, workers=4))
        cells = {(c.n, c.m): c for c in result.cells}
        for n in (3, 5, 8):
            big = cells[(n, 10_000)]
            assert 0.9 <= big.slope <= 1.1
            assert big.r2 >= 0.95
            assert cells[(n, 200)].r2 < big.r2
            if n <= 5:
                assert big.order_accuracy >= 0.9

    def test_gaussian_disturbances_degrade_estimates(self):
        """Test paired gaussian trials have larger residuals and mostly fail the triangularity check."""
        gaussian_residuals, power_residuals, warned = [], [], 0
        for t in range(50):
            base = random_model(GeneratorConfig(n=5, seed=t))
            for exponent in (1.0, 2.0):
                model = GroundTruthModel(
                    b_true=base.b_true,
                    constants=base.constants,
                    variances=base.variances,
                    exponents=np.full(5, exponent),
                    shuffle=base.shuffle,
                )
                data = generate(model, 10_000, np.random.default_rng(t))
                try:
                    result = discover(data)
                except ConvergenceError as err:
                    result = estimate(data, err.unmixing, ica_report=err.report)
                if exponent == 1.0:
                    gaussian_residuals.append(result.diagnostics.triangularity_residual)
                    warned += "triangularity" in result.diagnostics.labels()
                else:
                    power_residuals.append(result.diagnostics.triangularity_residual)
        assert np.median(gaussian_residuals) > np.median(power_residuals)
        assert warned > 25

from .experiment import ExperimentResult, TrialOutcome, TrialPlan, run_experiment, run_trial, trial_plans
from .records import ScatterRecord, align_to_ground_truth, order_is_correct, scatter_records
from .summary import SUMMARY_COLUMNS, CellSummary, scatter_fit, summarize_cell

__all__ = [
    "ScatterRecord",
    "align_to_ground_truth",
    "order_is_correct",
    "scatter_records",
    "CellSummary",
    "SUMMARY_COLUMNS",
    "scatter_fit",
    "summarize_cell",
    "TrialPlan",
    "TrialOutcome",
    "ExperimentResult",
    "run_trial",
    "run_experiment",
    "trial_plans",
]

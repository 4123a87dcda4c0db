"""
Edge pruning once a causal order is known.
"""

from .bootstrap import bootstrap_prune, edge_verdicts
from .regression import ols_from_covariance, regress_on_predecessors

__all__ = ["regress_on_predecessors", "ols_from_covariance", "bootstrap_prune", "edge_verdicts"]

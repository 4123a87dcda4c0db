"""
Centering, whitening and FastICA estimation of the unmixing matrix.
"""

from .fastica import fast_ica
from .whitening import center, sample_covariance, whiten

__all__ = ["center", "whiten", "sample_covariance", "fast_ica"]

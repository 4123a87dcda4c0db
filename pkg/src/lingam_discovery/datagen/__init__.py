"""
Synthetic LiNGAM data with retained ground truth.
"""

from .model import random_model, reference_model
from .noise import nongaussian_noise
from .simulate import Simulation, generate, simulate

__all__ = ["random_model", "reference_model", "nongaussian_noise", "generate", "simulate", "Simulation"]

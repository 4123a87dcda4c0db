from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Any

if TYPE_CHECKING:
    from .models import IcaReport, UnmixingMatrix


@dataclass(frozen=True, slots=True)
class Diagnostic:
    label: str  # triangularity/independence/ica
    message: str
    value: float | None = None
    threshold: float | None = None

    def to_dict(self) -> dict[str, Any]:
        d: dict[str, Any] = {"label": self.label, "message": self.message}
        if self.value is not None:
            d["value"] = float(self.value)
        if self.threshold is not None:
            d["threshold"] = float(self.threshold)
        return d

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> Diagnostic:
        return cls(
            label=str(d["label"]),
            message=str(d["message"]),
            value=d.get("value"),
            threshold=d.get("threshold"),
        )


class LingamError(RuntimeError):
    """Root of every error raised by the discovery library."""


class InvalidDataError(LingamError):
    pass


class DegenerateDataError(LingamError):
    """
    Raised when the data cannot support the requested estimate
    (rank-deficient covariance, constant rows, singular predecessor block).
    """

    def __init__(self, message: str, variable: str | None = None):
        super().__init__(message)
        self.variable = variable


class SingularStructureError(LingamError):
    pass


class InfeasibleAssignmentError(SingularStructureError):
    def __init__(self, shape: tuple[int, ...]):
        super().__init__(f"No finite-cost assignment exists for cost matrix of shape {shape}")
        self.shape = shape


class SearchLimitError(LingamError):
    def __init__(self, n: int, limit: int, hint: str = ""):
        msg = f"Exhaustive search over {n} variables exceeds the limit of {limit}"
        if hint:
            msg = f"{msg}; {hint}"
        super().__init__(msg)
        self.n = n
        self.limit = limit


class ConvergenceError(LingamError):
    """
    Raised when FastICA does not converge in any restart.
    Carries the best-effort unmixing matrix and the convergence report.
    """

    def __init__(self, unmixing: UnmixingMatrix, report: IcaReport):
        super().__init__(
            f"FastICA did not converge after {report.max_iterations} iterations "
            f"x {len(report.iterations)} restarts (best residual {min(report.residuals):.3g})"
        )
        self.unmixing = unmixing
        self.report = report


class BootstrapInstabilityError(LingamError):
    def __init__(self, failures: int, resamples: int):
        super().__init__(
            f"{failures} of {resamples} bootstrap resamples failed to re-estimate the connection strengths"
        )
        self.failures = failures
        self.resamples = resamples

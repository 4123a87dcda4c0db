from __future__ import annotations

from typing import Any, Literal

from pydantic import BaseModel, Field, field_validator, model_validator

ContrastName = Literal["logcosh", "cubic"]
DisturbanceFamily = Literal["power", "gaussian"]

SEED_MAX = 2**64 - 1

# chi-square(2) 0.999 quantile: per-component skew/kurtosis statistic below this
# is indistinguishable from gaussian.
GAUSSIANITY_THRESHOLD = 13.815510557964274


class IcaConfig(BaseModel):
    contrast: ContrastName = "logcosh"
    max_iterations: int = Field(default=1000, ge=1)
    tolerance: float = Field(default=1e-6, gt=0)
    restarts: int = Field(default=3, ge=1)
    seed: int = Field(default=0, ge=0, le=SEED_MAX)
    gaussianity_threshold: float = Field(default=GAUSSIANITY_THRESHOLD, gt=0)

    model_config = {"extra": "forbid"}


RowSolver = Literal["assignment", "exhaustive"]


class SearchConfig(BaseModel):
    row_solver: RowSolver = "assignment"
    exhaustive_limit: int = Field(default=8, ge=1, le=10)
    # step 5 above the limit: greedy ordering instead of an error
    allow_greedy: bool = False

    model_config = {"extra": "forbid"}


class DiagnosticsConfig(BaseModel):
    triangularity_threshold: float = Field(default=0.05, ge=0, le=1)
    independence_threshold: float = Field(default=0.1, ge=0, le=1)

    model_config = {"extra": "forbid"}


class PruneConfig(BaseModel):
    resamples: int = Field(default=100, ge=2)
    z_threshold: float = Field(default=2.0, ge=0)
    seed: int = Field(default=0, ge=0, le=SEED_MAX)
    max_failure_fraction: float = Field(default=0.1, ge=0, le=1)
    workers: int = Field(default=1, ge=1)

    model_config = {"extra": "forbid"}


def _check_range(name: str, r: tuple[float, float]) -> tuple[float, float]:
    lo, hi = r
    if lo > hi:
        raise ValueError(f"{name} must be well-ordered, got ({lo}, {hi})")
    return r


class GeneratorConfig(BaseModel):
    n: int = Field(default=4, ge=1)
    sparsity: float = Field(default=0.0, ge=0, le=1)
    coefficient_range: tuple[float, float] = (0.2, 2.0)
    exponent_ranges: tuple[tuple[float, float], tuple[float, float]] = ((0.5, 0.8), (1.2, 2.0))
    disturbance_variance_range: tuple[float, float] = (0.5, 2.0)
    constants_range: tuple[float, float] = (-1.0, 1.0)
    disturbance: DisturbanceFamily = "power"
    seed: int = Field(default=0, ge=0, le=SEED_MAX)

    model_config = {"extra": "forbid"}

    @field_validator("coefficient_range")
    @classmethod
    def _coefficients(cls, v: tuple[float, float]) -> tuple[float, float]:
        _check_range("coefficient_range", v)
        if v[0] <= 0:
            raise ValueError("coefficient_range holds magnitudes and must be positive")
        return v

    @field_validator("disturbance_variance_range")
    @classmethod
    def _variances(cls, v: tuple[float, float]) -> tuple[float, float]:
        _check_range("disturbance_variance_range", v)
        if v[0] <= 0:
            raise ValueError("disturbance variances must be strictly positive")
        return v

    @field_validator("constants_range")
    @classmethod
    def _constants(cls, v: tuple[float, float]) -> tuple[float, float]:
        return _check_range("constants_range", v)

    @field_validator("exponent_ranges")
    @classmethod
    def _exponents(
        cls, v: tuple[tuple[float, float], tuple[float, float]]
    ) -> tuple[tuple[float, float], tuple[float, float]]:
        for r in v:
            lo, hi = _check_range("exponent_ranges", r)
            if lo <= 0:
                raise ValueError("exponents must be positive")
            if lo <= 1.0 <= hi:
                raise ValueError(f"exponent interval ({lo}, {hi}) contains 1 (gaussian disturbances)")
        return v


class ExperimentConfig(BaseModel):
    n_values: list[int] = Field(default_factory=lambda: [3, 5, 8])
    m_values: list[int] = Field(default_factory=lambda: [200, 1000, 10000])
    trials: int = Field(default=20, ge=0)
    sparsities: list[float] = Field(default_factory=lambda: [0.0, 0.5])
    disturbance: DisturbanceFamily = "power"
    seed: int = Field(default=0, ge=0, le=SEED_MAX)
    workers: int = Field(default=1, ge=1)
    # cells with more failed trials than this are marked unreliable
    failure_fraction: float = Field(default=0.2, ge=0, le=1)

    model_config = {"extra": "forbid"}

    @field_validator("n_values", "m_values")
    @classmethod
    def _positive(cls, v: list[int]) -> list[int]:
        if any(x < 1 for x in v):
            raise ValueError("sweep sizes must be positive")
        return v

    @field_validator("sparsities")
    @classmethod
    def _sparsities(cls, v: list[float]) -> list[float]:
        if not v:
            raise ValueError("at least one sparsity level is required")
        if any(not 0.0 <= s <= 1.0 for s in v):
            raise ValueError("sparsity levels must lie in [0, 1]")
        return v


class RunConfig(BaseModel):
    """
    Effective configuration of a CLI run. Every section is optional in files;
    missing sections take their defaults.
    """

    ica: IcaConfig = Field(default_factory=IcaConfig)
    search: SearchConfig = Field(default_factory=SearchConfig)
    diagnostics: DiagnosticsConfig = Field(default_factory=DiagnosticsConfig)
    prune: PruneConfig = Field(default_factory=PruneConfig)
    generator: GeneratorConfig = Field(default_factory=GeneratorConfig)
    experiment: ExperimentConfig = Field(default_factory=ExperimentConfig)

    model_config = {"extra": "forbid"}

    @model_validator(mode="before")
    @classmethod
    def _drop_nulls(cls, d: Any) -> Any:
        # YAML "ica:" with no body parses to None
        if isinstance(d, dict):
            return {k: v for k, v in d.items() if v is not None}
        return d

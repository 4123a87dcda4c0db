from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any

import numpy as np

from .errors import Diagnostic, InvalidDataError, SingularStructureError

logger = logging.getLogger(__name__)

CONDITION_WARN = 1e8


def default_names(n: int) -> tuple[str, ...]:
    return tuple(f"x{i + 1}" for i in range(n))


def _frozen(a: Any, *, ndim: int | None = None, what: str = "array") -> np.ndarray:
    arr = np.array(a, dtype=float)
    if ndim is not None and arr.ndim != ndim:
        raise InvalidDataError(f"{what} must be {ndim}-dimensional, got shape {arr.shape}")
    arr.setflags(write=False)
    return arr


def _square(a: Any, what: str) -> np.ndarray:
    arr = _frozen(a, ndim=2, what=what)
    if arr.shape[0] != arr.shape[1] or arr.shape[0] < 1:
        raise InvalidDataError(f"{what} must be a non-empty square matrix, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise InvalidDataError(f"{what} contains non-finite entries")
    return arr


def _check_bijection(perm: tuple[int, ...], what: str) -> None:
    if sorted(perm) != list(range(len(perm))):
        raise InvalidDataError(f"{what} is not a permutation of 0..{len(perm) - 1}: {perm}")


def _names(names: Any, n: int) -> tuple[str, ...]:
    out = tuple(str(s) for s in names) if names else default_names(n)
    if len(out) != n:
        raise InvalidDataError(f"Expected {n} variable names, got {len(out)}")
    if len(set(out)) != n:
        raise InvalidDataError(f"Variable names must be unique: {out}")
    return out


@dataclass(frozen=True, slots=True, eq=False)
class DataMatrix:
    """
    Observed data, one row per variable and one column per sample (n x m).

    Construction validates n >= 1, m >= n and finiteness; values are stored as
    a read-only float64 copy.
    """

    values: np.ndarray
    variable_names: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        values = np.array(self.values, dtype=float)
        if values.ndim == 1:
            values = values.reshape(1, -1)
        if values.ndim != 2:
            raise InvalidDataError(f"Data must be a 2-D matrix, got shape {values.shape}")
        n, m = values.shape
        if n < 1:
            raise InvalidDataError("Data must contain at least one variable")
        if m < n:
            raise InvalidDataError(f"Need at least as many samples as variables (n={n}, m={m})")
        if not np.all(np.isfinite(values)):
            raise InvalidDataError("Data contains non-finite entries")
        if m < 10 * n:
            logger.warning("Only %d samples for %d variables; estimates will be unreliable", m, n)
        values.setflags(write=False)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "variable_names", _names(self.variable_names, n))

    @property
    def n(self) -> int:
        return int(self.values.shape[0])

    @property
    def m(self) -> int:
        return int(self.values.shape[1])

    def with_values(self, values: np.ndarray) -> DataMatrix:
        return DataMatrix(values=values, variable_names=self.variable_names)

    def permuted(self, perm: tuple[int, ...] | list[int]) -> DataMatrix:
        """Row k of the result is row perm[k] of this matrix."""
        idx = list(perm)
        return DataMatrix(
            values=self.values[idx],
            variable_names=tuple(self.variable_names[i] for i in idx),
        )


@dataclass(frozen=True, slots=True, eq=False)
class CenteringInfo:
    row_means: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "row_means", _frozen(self.row_means, ndim=1, what="row_means"))


@dataclass(frozen=True, slots=True, eq=False)
class WhiteningTransform:
    matrix: np.ndarray
    eigenvalues: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "matrix", _square(self.matrix, "whitening matrix"))
        eig = _frozen(self.eigenvalues, ndim=1, what="eigenvalues")
        if np.any(eig <= 0):
            raise InvalidDataError("Whitening eigenvalues must be strictly positive")
        object.__setattr__(self, "eigenvalues", eig)

    def apply(self, centered: np.ndarray) -> np.ndarray:
        return self.matrix @ centered


@dataclass(frozen=True, slots=True, eq=False)
class UnmixingMatrix:
    """
    Estimate of W = A^-1: rows recover independent components up to
    permutation and scale. Rejects singular matrices, warns when ill-conditioned.
    """

    w: np.ndarray

    def __post_init__(self) -> None:
        w = _square(self.w, "unmixing matrix")
        cond = np.linalg.cond(w)
        if not np.isfinite(cond):
            raise SingularStructureError("Unmixing matrix is singular")
        if cond > CONDITION_WARN:
            logger.warning("Unmixing matrix is ill-conditioned (condition number %.3g)", cond)
        object.__setattr__(self, "w", w)

    @property
    def n(self) -> int:
        return int(self.w.shape[0])


@dataclass(frozen=True, slots=True, eq=False)
class ConnectionMatrix:
    """b[i][j] is the strength of the edge x_j -> x_i. The diagonal is always zero."""

    b: np.ndarray
    variable_names: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        b = _square(self.b, "connection matrix")
        if np.any(np.diag(b) != 0.0):
            raise InvalidDataError("Connection matrix must have a zero diagonal")
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "variable_names", _names(self.variable_names, b.shape[0]))

    @property
    def n(self) -> int:
        return int(self.b.shape[0])

    def edges(self) -> list[tuple[int, int, float]]:
        """Nonzero entries as (i, j, weight) with weight = b[i][j]."""
        rows, cols = np.nonzero(self.b)
        return [(int(i), int(j), float(self.b[i, j])) for i, j in zip(rows, cols)]


@dataclass(frozen=True, slots=True)
class RowPermutation:
    """mapping[i] is the row of W placed at position i of the permuted matrix."""

    mapping: tuple[int, ...]
    objective_value: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "mapping", tuple(int(i) for i in self.mapping))
        _check_bijection(self.mapping, "Row permutation")

    def apply(self, w: np.ndarray) -> np.ndarray:
        return np.asarray(w)[list(self.mapping)]


@dataclass(frozen=True, slots=True)
class CausalOrder:
    """order[p] is the variable at causal position p; earlier variables never depend on later ones."""

    order: tuple[int, ...]
    residual: float
    approximate: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "order", tuple(int(i) for i in self.order))
        _check_bijection(self.order, "Causal order")
        if not self.residual >= 0.0:
            raise InvalidDataError(f"Causal order residual must be non-negative, got {self.residual}")

    @property
    def n(self) -> int:
        return len(self.order)

    @property
    def positions(self) -> tuple[int, ...]:
        """positions[v] is the causal rank of variable v."""
        pos = [0] * len(self.order)
        for p, v in enumerate(self.order):
            pos[v] = p
        return tuple(pos)

    def precedes_mask(self) -> np.ndarray:
        """mask[i][j] is True when j comes strictly before i, i.e. b[i][j] is allowed by the order."""
        pos = np.array(self.positions)
        return pos[None, :] < pos[:, None]


@dataclass(frozen=True, slots=True)
class IcaReport:
    """Convergence report of one fast_ica call (all restarts)."""

    converged: bool
    chosen_restart: int
    iterations: tuple[int, ...]
    residuals: tuple[float, ...]
    contrast_values: tuple[float, ...]
    restart_converged: tuple[bool, ...]
    nongaussianity: tuple[float, ...]
    unreliable: bool
    contrast: str
    max_iterations: int
    tolerance: float

    def to_dict(self) -> dict[str, Any]:
        return {
            "converged": self.converged,
            "chosen_restart": self.chosen_restart,
            "iterations": list(self.iterations),
            "residuals": [float(r) for r in self.residuals],
            "contrast_values": [float(c) for c in self.contrast_values],
            "restart_converged": list(self.restart_converged),
            "nongaussianity": [float(g) for g in self.nongaussianity],
            "unreliable": self.unreliable,
            "contrast": self.contrast,
            "max_iterations": self.max_iterations,
            "tolerance": self.tolerance,
        }

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> IcaReport:
        return cls(
            converged=bool(d["converged"]),
            chosen_restart=int(d["chosen_restart"]),
            iterations=tuple(int(i) for i in d["iterations"]),
            residuals=tuple(float(r) for r in d["residuals"]),
            contrast_values=tuple(float(c) for c in d["contrast_values"]),
            restart_converged=tuple(bool(c) for c in d["restart_converged"]),
            nongaussianity=tuple(float(g) for g in d["nongaussianity"]),
            unreliable=bool(d["unreliable"]),
            contrast=str(d["contrast"]),
            max_iterations=int(d["max_iterations"]),
            tolerance=float(d["tolerance"]),
        )


@dataclass(frozen=True, slots=True, eq=False)
class DiagnosticsReport:
    triangularity_residual: float
    independence_matrix: np.ndarray
    warnings: tuple[Diagnostic, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "independence_matrix", _square(self.independence_matrix, "independence matrix")
        )
        object.__setattr__(self, "warnings", tuple(self.warnings))

    @property
    def has_warnings(self) -> bool:
        return bool(self.warnings)

    def labels(self) -> list[str]:
        return [w.label for w in self.warnings]


@dataclass(frozen=True, slots=True, eq=False)
class LingamResult:
    b_hat: ConnectionMatrix
    causal_order: CausalOrder
    w_tilde_prime: UnmixingMatrix
    constants: np.ndarray
    diagnostics: DiagnosticsReport
    row_permutation: RowPermutation | None = None
    ica_report: IcaReport | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "constants", _frozen(self.constants, ndim=1, what="constants"))

    @property
    def n(self) -> int:
        return self.b_hat.n

    @property
    def variable_names(self) -> tuple[str, ...]:
        return self.b_hat.variable_names


class EdgeVerdict(str, Enum):
    KEPT = "kept"
    PRUNED = "pruned"
    FORCED_ZERO = "forced-zero"


@dataclass(frozen=True, slots=True, eq=False)
class PruneReport:
    kept: ConnectionMatrix
    edge_means: np.ndarray
    edge_stds: np.ndarray
    verdicts: tuple[tuple[EdgeVerdict, ...], ...]
    causal_order: CausalOrder
    failures: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "edge_means", _square(self.edge_means, "edge means"))
        object.__setattr__(self, "edge_stds", _square(self.edge_stds, "edge stds"))
        object.__setattr__(
            self, "verdicts", tuple(tuple(EdgeVerdict(v) for v in row) for row in self.verdicts)
        )

    def edge_table(self) -> list[tuple[int, int, float, float, EdgeVerdict]]:
        """One row (i, j, mean, std, verdict) per off-diagonal ordered pair."""
        n = self.kept.n
        return [
            (i, j, float(self.edge_means[i, j]), float(self.edge_stds[i, j]), self.verdicts[i][j])
            for i in range(n)
            for j in range(n)
            if i != j
        ]

    def count(self, verdict: EdgeVerdict) -> int:
        return sum(1 for row in self.verdicts for v in row if v == verdict)


@dataclass(frozen=True, slots=True, eq=False)
class GroundTruthModel:
    """
    Generating model. b_true, constants, variances and exponents are indexed in
    generation (causal) order, b_true strictly lower triangular. shuffle[k] is the
    causal index of the variable observed in row k.
    """

    b_true: ConnectionMatrix
    constants: np.ndarray
    variances: np.ndarray
    exponents: np.ndarray
    shuffle: tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        n = self.b_true.n
        if np.any(np.triu(self.b_true.b) != 0.0):
            raise InvalidDataError("Ground-truth connection matrix must be strictly lower triangular")
        for name in ("constants", "variances", "exponents"):
            arr = _frozen(getattr(self, name), ndim=1, what=name)
            if arr.shape[0] != n:
                raise InvalidDataError(f"{name} must have length {n}")
            object.__setattr__(self, name, arr)
        if np.any(self.variances <= 0):
            raise InvalidDataError("Disturbance variances must be strictly positive")
        shuffle = tuple(int(i) for i in self.shuffle) if self.shuffle else tuple(range(n))
        if len(shuffle) != n:
            raise InvalidDataError(f"shuffle must have length {n}")
        _check_bijection(shuffle, "Shuffle")
        object.__setattr__(self, "shuffle", shuffle)

    @property
    def n(self) -> int:
        return self.b_true.n

    def mixing_matrix(self) -> np.ndarray:
        """A = (I - B)^-1 in generation order."""
        return np.linalg.inv(np.eye(self.n) - self.b_true.b)

    def observed_b(self) -> np.ndarray:
        idx = list(self.shuffle)
        return self.b_true.b[np.ix_(idx, idx)]

    def observed_constants(self) -> np.ndarray:
        return self.constants[list(self.shuffle)]

    def observed_variances(self) -> np.ndarray:
        return self.variances[list(self.shuffle)]

    def observed_exponents(self) -> np.ndarray:
        return self.exponents[list(self.shuffle)]

    def true_order(self) -> tuple[int, ...]:
        """Generation order expressed in observed row indices."""
        order = [0] * self.n
        for k, p in enumerate(self.shuffle):
            order[p] = k
        return tuple(order)

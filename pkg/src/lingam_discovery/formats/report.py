"""
YAML documents: ground-truth sidecars, discovery results and prune reports. Each document
carries a `format` tag and a `version`; readers reject anything else.
"""

from __future__ import annotations

from pathlib import Path
from typing import Any

import numpy as np
import yaml

from ..errors import Diagnostic, InvalidDataError
from ..models import (
    CausalOrder,
    ConnectionMatrix,
    DiagnosticsReport,
    GroundTruthModel,
    IcaReport,
    LingamResult,
    PruneReport,
    RowPermutation,
    UnmixingMatrix,
)

FORMAT_VERSION = 1
GROUND_TRUTH_FORMAT = "lingam-ground-truth"
RESULT_FORMAT = "lingam-result"
PRUNE_FORMAT = "lingam-prune-report"


def _floats(a: np.ndarray) -> Any:
    return np.asarray(a, dtype=float).tolist()


def dumps(doc: dict[str, Any]) -> str:
    return yaml.safe_dump(doc, sort_keys=False, default_flow_style=None, allow_unicode=True)


def _dump(doc: dict[str, Any], dest: str | Path) -> None:
    Path(dest).write_text(dumps(doc), encoding="utf-8")


def _load(src: str | Path, expected: str) -> dict[str, Any]:
    p = Path(src)
    if not p.exists():
        raise FileNotFoundError(str(src))
    try:
        doc = yaml.safe_load(p.read_text(encoding="utf-8"))
    except yaml.YAMLError as e:
        raise InvalidDataError(f"{src}: not valid YAML ({e})") from e
    if not isinstance(doc, dict) or doc.get("format") != expected:
        raise InvalidDataError(f"{src}: not a {expected} document")
    if doc.get("version") != FORMAT_VERSION:
        raise InvalidDataError(f"{src}: unsupported {expected} version {doc.get('version')!r}")
    return doc


# ---------------------------------------------------------------------------
# ground truth
# ---------------------------------------------------------------------------


def ground_truth_to_dict(model: GroundTruthModel, config: dict[str, Any] | None = None) -> dict[str, Any]:
    doc: dict[str, Any] = {
        "format": GROUND_TRUTH_FORMAT,
        "version": FORMAT_VERSION,
        "n": model.n,
        "variable_names": list(model.b_true.variable_names),
        "edges": [{"i": i, "j": j, "weight": w} for i, j, w in model.b_true.edges()],
        "constants": _floats(model.constants),
        "variances": _floats(model.variances),
        "exponents": _floats(model.exponents),
        "shuffle": list(model.shuffle),
    }
    if config is not None:
        doc["config"] = config
    return doc


def ground_truth_from_dict(doc: dict[str, Any]) -> GroundTruthModel:
    try:
        n = int(doc["n"])
        b = np.zeros((n, n))
        for edge in doc["edges"] or []:
            b[int(edge["i"]), int(edge["j"])] = float(edge["weight"])
        return GroundTruthModel(
            b_true=ConnectionMatrix(b=b, variable_names=tuple(doc["variable_names"])),
            constants=np.array(doc["constants"], dtype=float),
            variances=np.array(doc["variances"], dtype=float),
            exponents=np.array(doc["exponents"], dtype=float),
            shuffle=tuple(doc["shuffle"]),
        )
    except (KeyError, TypeError, ValueError, IndexError) as e:
        raise InvalidDataError(f"Malformed ground-truth document: {e}") from e


def write_ground_truth(model: GroundTruthModel, dest: str | Path, config: dict[str, Any] | None = None) -> None:
    _dump(ground_truth_to_dict(model, config), dest)


def read_ground_truth(src: str | Path) -> GroundTruthModel:
    return ground_truth_from_dict(_load(src, GROUND_TRUTH_FORMAT))


# ---------------------------------------------------------------------------
# discovery results
# ---------------------------------------------------------------------------


def result_to_dict(result: LingamResult, config: dict[str, Any] | None = None) -> dict[str, Any]:
    diag = result.diagnostics
    doc: dict[str, Any] = {
        "format": RESULT_FORMAT,
        "version": FORMAT_VERSION,
        "variable_names": list(result.variable_names),
        "b_hat": _floats(result.b_hat.b),
        "causal_order": {
            "order": list(result.causal_order.order),
            "names": [result.variable_names[v] for v in result.causal_order.order],
            "residual": float(result.causal_order.residual),
            "approximate": result.causal_order.approximate,
        },
        "constants": _floats(result.constants),
        "w_tilde_prime": _floats(result.w_tilde_prime.w),
        "row_permutation": (
            {
                "mapping": list(result.row_permutation.mapping),
                "objective_value": float(result.row_permutation.objective_value),
            }
            if result.row_permutation
            else None
        ),
        "diagnostics": {
            "triangularity_residual": float(diag.triangularity_residual),
            "independence_matrix": _floats(diag.independence_matrix),
            "warnings": [w.to_dict() for w in diag.warnings],
        },
        "ica": result.ica_report.to_dict() if result.ica_report else None,
    }
    if config is not None:
        doc["config"] = config
    return doc


def result_from_dict(doc: dict[str, Any]) -> LingamResult:
    try:
        names = tuple(doc["variable_names"])
        order = doc["causal_order"]
        perm = doc.get("row_permutation")
        diag = doc["diagnostics"]
        ica = doc.get("ica")
        return LingamResult(
            b_hat=ConnectionMatrix(b=np.array(doc["b_hat"], dtype=float), variable_names=names),
            causal_order=CausalOrder(
                order=tuple(order["order"]),
                residual=float(order["residual"]),
                approximate=bool(order.get("approximate", False)),
            ),
            w_tilde_prime=UnmixingMatrix(w=np.array(doc["w_tilde_prime"], dtype=float)),
            constants=np.array(doc["constants"], dtype=float),
            diagnostics=DiagnosticsReport(
                triangularity_residual=float(diag["triangularity_residual"]),
                independence_matrix=np.array(diag["independence_matrix"], dtype=float),
                warnings=tuple(Diagnostic.from_dict(w) for w in diag.get("warnings") or []),
            ),
            row_permutation=(
                RowPermutation(mapping=tuple(perm["mapping"]), objective_value=float(perm["objective_value"]))
                if perm
                else None
            ),
            ica_report=IcaReport.from_dict(ica) if ica else None,
        )
    except (KeyError, TypeError, ValueError) as e:
        raise InvalidDataError(f"Malformed result document: {e}") from e


def write_result(result: LingamResult, dest: str | Path, config: dict[str, Any] | None = None) -> None:
    _dump(result_to_dict(result, config), dest)


def read_result(src: str | Path) -> LingamResult:
    return result_from_dict(_load(src, RESULT_FORMAT))


# ---------------------------------------------------------------------------
# prune reports
# ---------------------------------------------------------------------------


def prune_report_to_dict(report: PruneReport, config: dict[str, Any] | None = None) -> dict[str, Any]:
    names = report.kept.variable_names
    doc: dict[str, Any] = {
        "format": PRUNE_FORMAT,
        "version": FORMAT_VERSION,
        "variable_names": list(names),
        "causal_order": {
            "order": list(report.causal_order.order),
            "names": [names[v] for v in report.causal_order.order],
            "residual": float(report.causal_order.residual),
            "approximate": report.causal_order.approximate,
        },
        "kept": _floats(report.kept.b),
        "edges": [
            {"source": names[j], "target": names[i], "mean": mean, "std": std, "verdict": verdict.value}
            for i, j, mean, std, verdict in report.edge_table()
        ],
        "failures": report.failures,
    }
    if config is not None:
        doc["config"] = config
    return doc

"""
CSV codecs. Files may start with '# key: value' comment lines recording the run
configuration; readers skip them. Floats are written at full precision and read
back with round-trip precision, so parse(write(x)) == x.
"""

from __future__ import annotations

import io
import json
from pathlib import Path
from typing import Any, TextIO

import numpy as np
import pandas as pd

from ..errors import InvalidDataError
from ..models import CausalOrder, ConnectionMatrix, DataMatrix, EdgeVerdict, LingamResult, PruneReport

SCATTER_COLUMNS = ["trial", "n", "m", "i", "j", "b_true", "b_est"]
EDGE_COLUMNS = ["i", "j", "source", "target", "mean", "std", "verdict"]


def _header(meta: dict[str, Any] | None) -> str:
    if not meta:
        return ""
    return "".join(f"# {k}: {json.dumps(v, sort_keys=True)}\n" for k, v in meta.items())


def _write(df: pd.DataFrame, dest: str | Path | TextIO, meta: dict[str, Any] | None) -> None:
    text = _header(meta) + df.to_csv(index=False, lineterminator="\n")
    if isinstance(dest, (str, Path)):
        Path(dest).write_text(text, encoding="utf-8")
    else:
        dest.write(text)


def _read_text(src: str | Path | TextIO) -> str:
    if isinstance(src, (str, Path)):
        p = Path(src)
        if not p.exists():
            raise FileNotFoundError(str(src))
        return p.read_text(encoding="utf-8")
    return src.read()


def read_meta(text: str) -> dict[str, Any]:
    meta: dict[str, Any] = {}
    for line in text.splitlines():
        if not line.startswith("#"):
            break
        key, sep, value = line[1:].strip().partition(":")
        if sep:
            try:
                meta[key.strip()] = json.loads(value)
            except json.JSONDecodeError:
                meta[key.strip()] = value.strip()
    return meta


def _frame(text: str) -> pd.DataFrame:
    body = "\n".join(line for line in text.splitlines() if not line.startswith("#"))
    try:
        return pd.read_csv(io.StringIO(body), float_precision="round_trip")
    except (pd.errors.EmptyDataError, pd.errors.ParserError) as e:
        raise InvalidDataError(f"Malformed CSV: {e}") from e


# ---------------------------------------------------------------------------
# datasets: header row of variable names, one sample per line
# ---------------------------------------------------------------------------


def write_dataset(data: DataMatrix, dest: str | Path | TextIO, meta: dict[str, Any] | None = None) -> None:
    df = pd.DataFrame(data.values.T, columns=list(data.variable_names))
    _write(df, dest, meta)


def read_dataset(src: str | Path | TextIO) -> DataMatrix:
    df = _frame(_read_text(src))
    if df.shape[1] == 0 or df.shape[0] == 0:
        raise InvalidDataError("Dataset has no variables or no samples")
    non_numeric = [c for c in df.columns if not pd.api.types.is_numeric_dtype(df[c])]
    if non_numeric:
        raise InvalidDataError(f"Non-numeric values in columns {non_numeric}")
    if df.isna().to_numpy().any():
        raise InvalidDataError("Dataset has missing values")
    return DataMatrix(
        values=df.to_numpy(dtype=float).T,
        variable_names=tuple(str(c) for c in df.columns),
    )


# ---------------------------------------------------------------------------
# prune reports: edge table (i, j, mean, std, verdict)
# ---------------------------------------------------------------------------


def write_prune_report(report: PruneReport, dest: str | Path | TextIO, meta: dict[str, Any] | None = None) -> None:
    names = report.kept.variable_names
    rows = [
        {
            "i": i,
            "j": j,
            "source": names[j],
            "target": names[i],
            "mean": mean,
            "std": std,
            "verdict": verdict.value,
        }
        for i, j, mean, std, verdict in report.edge_table()
    ]
    header = {
        "variables": list(names),
        "causal_order": list(report.causal_order.order),
        "order_residual": report.causal_order.residual,
        "order_approximate": report.causal_order.approximate,
        "failures": report.failures,
    }
    header.update(meta or {})
    _write(pd.DataFrame(rows, columns=EDGE_COLUMNS), dest, header)


def read_prune_report(src: str | Path | TextIO) -> PruneReport:
    text = _read_text(src)
    meta = read_meta(text)
    try:
        names = tuple(meta["variables"])
        order = CausalOrder(
            order=tuple(meta["causal_order"]),
            residual=float(meta["order_residual"]),
            approximate=bool(meta.get("order_approximate", False)),
        )
    except KeyError as e:
        raise InvalidDataError(f"Prune report header lacks {e}") from e
    df = _frame(text)
    n = len(names)
    means = np.zeros((n, n))
    stds = np.zeros((n, n))
    verdicts = [[EdgeVerdict.FORCED_ZERO] * n for _ in range(n)]
    for row in df.itertuples(index=False):
        i, j = int(row.i), int(row.j)
        means[i, j] = float(row.mean)
        stds[i, j] = float(row.std)
        verdicts[i][j] = EdgeVerdict(row.verdict)
    kept = np.where(np.array([[v == EdgeVerdict.KEPT for v in r] for r in verdicts]), means, 0.0)
    return PruneReport(
        kept=ConnectionMatrix(b=kept, variable_names=names),
        edge_means=means,
        edge_stds=stds,
        verdicts=tuple(tuple(r) for r in verdicts),
        causal_order=order,
        failures=int(meta.get("failures", 0)),
    )


# ---------------------------------------------------------------------------
# experiment tables
# ---------------------------------------------------------------------------


def write_table(
    rows: list[dict[str, Any]], columns: list[str], dest: str | Path | TextIO, meta: dict[str, Any] | None = None
) -> None:
    _write(pd.DataFrame(rows, columns=columns), dest, meta)


def read_table(src: str | Path | TextIO) -> pd.DataFrame:
    return _frame(_read_text(src))


# ---------------------------------------------------------------------------
# discovery results as a matrix: row i holds the coefficients of target i
# ---------------------------------------------------------------------------


def write_result_table(result: LingamResult, dest: str | Path | TextIO, meta: dict[str, Any] | None = None) -> None:
    names = list(result.variable_names)
    df = pd.DataFrame(result.b_hat.b, columns=names)
    df.insert(0, "target", names)
    header = {
        "variables": names,
        "causal_order": list(result.causal_order.order),
        "order_residual": float(result.causal_order.residual),
        "order_approximate": result.causal_order.approximate,
        "constants": [float(c) for c in result.constants],
        "warnings": result.diagnostics.labels(),
    }
    header.update(meta or {})
    _write(df, dest, header)


def read_result_table(src: str | Path | TextIO) -> tuple[ConnectionMatrix, CausalOrder, np.ndarray]:
    text = _read_text(src)
    meta = read_meta(text)
    try:
        names = tuple(meta["variables"])
        order = CausalOrder(
            order=tuple(meta["causal_order"]),
            residual=float(meta["order_residual"]),
            approximate=bool(meta.get("order_approximate", False)),
        )
        constants = np.array(meta["constants"], dtype=float)
    except KeyError as e:
        raise InvalidDataError(f"Result table header lacks {e}") from e
    df = _frame(text)
    if list(df.columns[1:]) != list(names):
        raise InvalidDataError("Result table columns do not match its variables header")
    b = df[list(names)].to_numpy(dtype=float)
    return ConnectionMatrix(b=b, variable_names=names), order, constants

"""
Command-line front end.

    lingam generate   --n 4 --m 1000 -o data.csv          (+ data.truth.yaml)
    lingam discover   data.csv -o result.yaml [--dot graph.dot]
    lingam prune      data.csv result.yaml -o edges.csv [--dot pruned.dot]
    lingam experiment -o scatter.csv [--summary summary.csv]

--format picks the output layout: discover and prune take csv, report (YAML)
or dot; generate and experiment write CSV only.

Exit codes: 0 success, 1 unexpected error, 2 invalid input / I/O / degenerate
data / dimension mismatch / search limit, 3 success with diagnostic warnings,
4 ICA did not converge (best-effort result still written).
"""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Callable
from pathlib import Path
from typing import Any

import numpy as np
import yaml
from pydantic import ValidationError

from .config.loader import load_run_config_from_file, merge_overrides
from .config.schema import RunConfig
from .datagen.model import random_model, reference_model
from .datagen.simulate import generate
from .errors import ConvergenceError, LingamError
from .evaluation.experiment import run_experiment
from .evaluation.summary import SUMMARY_COLUMNS
from .formats.dot import to_dot
from .formats.report import dumps, prune_report_to_dict, read_result, result_to_dict, write_ground_truth
from .formats.tables import (
    SCATTER_COLUMNS,
    read_dataset,
    read_result_table,
    write_dataset,
    write_prune_report,
    write_result_table,
    write_table,
)
from .lingam.discover import discover, estimate
from .models import CausalOrder, EdgeVerdict, LingamResult
from .pruning.bootstrap import bootstrap_prune
from .runlog.logger import RunLogger, get_run_logger

logger = logging.getLogger("lingam_discovery.cli")

EXIT_OK = 0
EXIT_UNEXPECTED = 1
EXIT_INVALID = 2
EXIT_WARNINGS = 3
EXIT_NOT_CONVERGED = 4

STDOUT = "-"

Handler = Callable[[argparse.Namespace, RunConfig, RunLogger | None], int]


# ---------------------------------------------------------------------------
# output helpers
# ---------------------------------------------------------------------------


def _emit(text: str, dest: str) -> None:
    if dest == STDOUT:
        sys.stdout.write(text)
    else:
        Path(dest).write_text(text, encoding="utf-8")


def _sink(dest: str) -> Any:
    return sys.stdout if dest == STDOUT else dest


def _sidecar(output: str, suffix: str) -> str | None:
    if output == STDOUT:
        return None
    p = Path(output)
    return str(p.with_name(p.stem + suffix))


def _config_meta(config: RunConfig, *sections: str) -> dict[str, Any]:
    dumped = config.model_dump(mode="json")
    return {s: dumped[s] for s in sections}


def _table_only(args: argparse.Namespace) -> bool:
    if args.format in (None, "csv"):
        return True
    sys.stderr.write(f"error: {args.command} writes CSV only, not --format {args.format}\n")
    return False


def _report_warnings(result: LingamResult) -> None:
    for w in result.diagnostics.warnings:
        sys.stderr.write(f"warning [{w.label}]: {w.message}\n")


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def cmd_generate(args: argparse.Namespace, config: RunConfig, run_logger: RunLogger | None) -> int:
    if not _table_only(args):
        return EXIT_INVALID
    gen = config.generator
    model = reference_model() if args.reference else random_model(gen)
    rng = np.random.default_rng(np.random.SeedSequence([gen.seed, args.m]))
    data = generate(model, args.m, rng)

    meta = {"command": "generate", "m": args.m, "reference": args.reference, "config": _config_meta(config, "generator")}
    write_dataset(data, _sink(args.output), meta)
    truth = args.truth or _sidecar(args.output, ".truth.yaml")
    if truth:
        write_ground_truth(model, truth, config=_config_meta(config, "generator"))

    if run_logger is not None:
        run_logger.log(action="generate", n=model.n, m=args.m, edges=len(model.b_true.edges()), output=args.output)
    return EXIT_OK


def _write_discovery(result: LingamResult, args: argparse.Namespace, config: RunConfig) -> None:
    meta = _config_meta(config, "ica", "search", "diagnostics")
    fmt = args.format or "report"
    if fmt == "report":
        _emit(dumps(result_to_dict(result, config=meta)), args.output)
    elif fmt == "csv":
        write_result_table(result, _sink(args.output), {"config": meta})
    else:
        _emit(to_dot(result.b_hat, result.causal_order), args.output)
    if args.dot:
        _emit(to_dot(result.b_hat, result.causal_order), args.dot)


def cmd_discover(args: argparse.Namespace, config: RunConfig, run_logger: RunLogger | None) -> int:
    data = read_dataset(args.dataset)
    try:
        result = discover(
            data,
            config.ica,
            search_config=config.search,
            diagnostics_config=config.diagnostics,
            run_logger=run_logger,
        )
    except ConvergenceError as e:
        sys.stderr.write(f"error: {e}\n")
        result = estimate(
            data,
            e.unmixing,
            ica_report=e.report,
            search_config=config.search,
            diagnostics_config=config.diagnostics,
            run_logger=run_logger,
        )
        _write_discovery(result, args, config)
        _report_warnings(result)
        sys.stderr.write("warning: best-effort result written from the last unmixing estimate\n")
        return EXIT_NOT_CONVERGED

    _write_discovery(result, args, config)
    _report_warnings(result)
    return EXIT_WARNINGS if result.diagnostics.has_warnings else EXIT_OK


def _load_order(path: str) -> tuple[tuple[str, ...], CausalOrder]:
    if Path(path).suffix.lower() == ".csv":
        b, order, _ = read_result_table(path)
        return b.variable_names, order
    result = read_result(path)
    return result.variable_names, result.causal_order


def cmd_prune(args: argparse.Namespace, config: RunConfig, run_logger: RunLogger | None) -> int:
    data = read_dataset(args.dataset)
    names, order = _load_order(args.result)
    if order.n != data.n:
        sys.stderr.write(f"error: result orders {order.n} variables but the dataset has {data.n}\n")
        return EXIT_INVALID
    if names != data.variable_names:
        sys.stderr.write(
            f"error: result variables {list(names)} differ from the dataset's {list(data.variable_names)}\n"
        )
        return EXIT_INVALID

    report = bootstrap_prune(data, order, config.prune)
    meta = _config_meta(config, "prune")
    fmt = args.format or "csv"
    if fmt == "csv":
        write_prune_report(report, _sink(args.output), {"config": meta})
    elif fmt == "report":
        _emit(dumps(prune_report_to_dict(report, config=meta)), args.output)
    else:
        _emit(to_dot(report.kept, order), args.output)
    if args.dot:
        _emit(to_dot(report.kept, order), args.dot)

    if run_logger is not None:
        run_logger.log(
            action="prune",
            n=data.n,
            m=data.m,
            kept=report.count(EdgeVerdict.KEPT),
            failures=report.failures,
        )
    return EXIT_OK


def cmd_experiment(args: argparse.Namespace, config: RunConfig, run_logger: RunLogger | None) -> int:
    if not _table_only(args):
        return EXIT_INVALID
    result = run_experiment(config, run_logger)
    meta = {"config": _config_meta(config, "experiment", "generator", "ica", "search")}

    write_table([r.to_row() for r in result.records], SCATTER_COLUMNS, _sink(args.output), meta)
    summary = args.summary or _sidecar(args.output, ".summary.csv")
    if summary:
        write_table([c.to_row() for c in result.cells], SUMMARY_COLUMNS, summary, meta)

    for cell in result.cells:
        if cell.unreliable:
            sys.stderr.write(
                f"warning: cell n={cell.n} m={cell.m} unreliable ({cell.failures} of {cell.trials} trials failed)\n"
            )
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="YAML or JSON run configuration")
    common.add_argument("--seed", type=int, help="seed for the command's random source")
    common.add_argument("-o", "--output", required=True, help="output path, '-' for stdout")
    common.add_argument(
        "--format",
        choices=["csv", "dot", "report"],
        help="discover: report (default), csv or dot; prune: csv (default), report or dot; generate and experiment: csv",
    )
    common.add_argument(
        "--log-level",
        default="WARNING",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        help="INFO and below also emit JSON run events",
    )

    parser = argparse.ArgumentParser(prog="lingam", description="LiNGAM causal discovery")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", parents=[common], help="simulate a dataset with known ground truth")
    p.add_argument("--n", type=int, help="number of variables")
    p.add_argument("--m", type=int, default=1000, help="number of samples")
    p.add_argument("--sparsity", type=float)
    p.add_argument("--disturbance", choices=["power", "gaussian"])
    p.add_argument("--reference", action="store_true", help="use the fixed four-variable reference network")
    p.add_argument("--truth", help="ground-truth sidecar path (default: <output>.truth.yaml)")
    p.set_defaults(handler=cmd_generate)

    p = sub.add_parser("discover", parents=[common], help="estimate B, the causal order and constants")
    p.add_argument("dataset")
    p.add_argument("--dot", help="also write the estimated graph as DOT")
    p.add_argument("--greedy", action="store_true", default=None, help="greedy causal order above the search limit")
    p.add_argument("--row-solver", choices=["assignment", "exhaustive"])
    p.add_argument("--contrast", choices=["logcosh", "cubic"])
    p.add_argument("--restarts", type=int)
    p.add_argument("--max-iterations", type=int)
    p.set_defaults(handler=cmd_discover)

    p = sub.add_parser("prune", parents=[common], help="bootstrap-prune the edges of a discovery result")
    p.add_argument("dataset")
    p.add_argument("result", help="result file from discover (YAML report or CSV)")
    p.add_argument("--resamples", type=int)
    p.add_argument("--z-threshold", type=float)
    p.add_argument("--workers", type=int)
    p.add_argument("--dot", help="also write the pruned graph as DOT")
    p.set_defaults(handler=cmd_prune)

    p = sub.add_parser("experiment", parents=[common], help="synthetic-data accuracy sweep")
    p.add_argument("--n-values", type=int, nargs="+")
    p.add_argument("--m-values", type=int, nargs="+")
    p.add_argument("--trials", type=int)
    p.add_argument("--sparsities", type=float, nargs="+")
    p.add_argument("--disturbance", choices=["power", "gaussian"])
    p.add_argument("--workers", type=int)
    p.add_argument("--summary", help="per-cell summary path (default: <output>.summary.csv)")
    p.set_defaults(handler=cmd_experiment)

    return parser


def _overrides(args: argparse.Namespace) -> dict[str, dict[str, Any]]:
    get = lambda name: getattr(args, name, None)  # noqa: E731
    seed_section = {"generate": "generator", "discover": "ica", "prune": "prune", "experiment": "experiment"}
    overrides: dict[str, dict[str, Any]] = {
        "generator": {"n": get("n"), "sparsity": get("sparsity")},
        "ica": {"contrast": get("contrast"), "restarts": get("restarts"), "max_iterations": get("max_iterations")},
        "search": {"allow_greedy": get("greedy"), "row_solver": get("row_solver")},
        "prune": {"resamples": get("resamples"), "z_threshold": get("z_threshold")},
        "experiment": {
            "n_values": get("n_values"),
            "m_values": get("m_values"),
            "trials": get("trials"),
            "sparsities": get("sparsities"),
        },
    }
    section = {"generate": "generator", "experiment": "experiment"}.get(args.command)
    if section:
        overrides[section]["disturbance"] = get("disturbance")
    worker_section = {"prune": "prune", "experiment": "experiment"}.get(args.command)
    if worker_section:
        overrides[worker_section]["workers"] = get("workers")
    overrides[seed_section[args.command]]["seed"] = args.seed
    return overrides


def load_config(args: argparse.Namespace) -> RunConfig:
    config = load_run_config_from_file(args.config) if args.config else RunConfig()
    return merge_overrides(config, _overrides(args))


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=args.log_level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")

    try:
        config = load_config(args)
        run_logger = get_run_logger() if logging.getLevelName(args.log_level) <= logging.INFO else None
        handler: Handler = args.handler
        return handler(args, config, run_logger)
    except (LingamError, ValidationError, yaml.YAMLError, ValueError, OSError) as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_INVALID
    except Exception:
        logger.exception("Unexpected failure")
        return EXIT_UNEXPECTED


if __name__ == "__main__":
    raise SystemExit(main())

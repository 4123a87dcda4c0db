"""
File formats: CSV datasets and tables, YAML reports, Graphviz DOT.
"""

from .dot import to_dot
from .report import (
    prune_report_to_dict,
    read_ground_truth,
    read_result,
    result_from_dict,
    result_to_dict,
    write_ground_truth,
    write_result,
)
from .tables import (
    EDGE_COLUMNS,
    SCATTER_COLUMNS,
    read_dataset,
    read_meta,
    read_prune_report,
    read_result_table,
    read_table,
    write_dataset,
    write_prune_report,
    write_result_table,
    write_table,
)

__all__ = [
    "read_dataset",
    "write_dataset",
    "read_prune_report",
    "write_prune_report",
    "read_table",
    "write_table",
    "read_meta",
    "read_result_table",
    "write_result_table",
    "SCATTER_COLUMNS",
    "EDGE_COLUMNS",
    "read_ground_truth",
    "write_ground_truth",
    "read_result",
    "write_result",
    "result_to_dict",
    "result_from_dict",
    "prune_report_to_dict",
    "to_dot",
]

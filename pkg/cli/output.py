"""
CSV and JSON writers for command results.

Columns are fixed per command and rows contain no timestamps, so equal
inputs give byte-identical files.
"""

import csv
import io
import json
import logging
import math
import sys
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, List, Optional, Sequence

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1

CDF_COLUMNS = ("m", "n", "p", "gamma", "t", "value", "err_estimate", "method", "seed", "draws")
THRESHOLD_COLUMNS = ("m", "n", "p", "alpha", "mu_th", "p_f", "err_estimate", "method", "seed", "draws")
ROC_COLUMNS = ("m", "n", "p", "gamma", "alpha", "mu_th", "p_f", "p_d", "err_estimate", "method",
               "seed", "draws")
SIMULATE_CDF_COLUMNS = ("m", "n", "p", "gamma", "t", "value", "err_estimate", "exact", "exact_err",
                        "exact_method", "method", "seed", "draws")
SIMULATE_CFAR_COLUMNS = ("m", "n", "p", "mu_th", "covariance", "value", "err_estimate", "exact",
                         "exact_err", "exact_method", "method", "seed", "draws")
SIMULATE_ROBUSTNESS_COLUMNS = ("m", "n", "p", "statistic", "epsilon", "threshold", "nominal",
                               "value", "err_estimate", "method", "seed", "draws")


@dataclass
class Table:
    """Rows of one command result under a fixed header."""

    command: str
    columns: Sequence[str]
    rows: List[List[Any]] = field(default_factory=list)

    def add(self, **values):
        missing = set(self.columns) - set(values)
        if missing:
            raise KeyError(f"missing columns {sorted(missing)} for {self.command}")
        self.rows.append([values[name] for name in self.columns])


def _cell(value) -> str:
    if isinstance(value, Enum):
        return str(value.value)
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        if math.isnan(value):
            return "nan"
        return format(value, ".17g")
    if value is None:
        return ""
    return str(value)


def _json_cell(value):
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, float) and not math.isfinite(value):
        return None
    return value


def render_csv(table: Table) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(table.columns)
    for row in table.rows:
        writer.writerow([_cell(value) for value in row])
    return buffer.getvalue()


def render_json(table: Table) -> str:
    """{"command", "schema_version", "columns", "rows"} with rows as lists in column order."""
    document = {
        "command": table.command,
        "schema_version": SCHEMA_VERSION,
        "columns": list(table.columns),
        "rows": [[_json_cell(value) for value in row] for row in table.rows],
    }
    return json.dumps(document, indent=2, sort_keys=False) + "\n"


def write_table(table: Table, fmt: str = "csv", path: Optional[str] = None) -> str:
    """
    Render a table and write it to ``path`` (stdout when None).

    Returns:
        str: the rendered text
    """
    text = render_json(table) if fmt == "json" else render_csv(table)
    if path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        with open(path, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
        logger.info(f"Wrote {len(table.rows)} {table.command} rows to {path}")
    return text

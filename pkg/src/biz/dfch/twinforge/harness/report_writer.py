# Copyright (c) 2026 Ronald Rink, http://d-fens.ch
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <https://www.gnu.org/licenses/>.

"""CSV and JSON files of experiment results."""

from __future__ import annotations

import csv
import json
from pathlib import Path
from typing import Any

from ..errors import CheckpointIOError
from .result_table import ResultRow, SweepResult

CSV_HEADER = ("knob", "value", "method", "seed", "task", "score", "std")


def _format(value: float | None) -> str:
    return "" if value is None else repr(float(value))


def write_csv(result: SweepResult, path: Path | str) -> Path:
    """Writes every row followed by the seed summary rows.

    Raises:
        CheckpointIOError: If the file cannot be written.
    """

    assert isinstance(result, SweepResult)

    target = Path(path)
    rows: list[ResultRow] = [*result.rows, *result.summary()]
    try:
        with open(target, "w", encoding="utf-8", newline="") as f:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(CSV_HEADER)
            for row in rows:
                writer.writerow(
                    (row.knob, row.value, row.method, row.seed, row.task, _format(row.score), _format(row.std))
                )
    except OSError as ex:
        raise CheckpointIOError(f"Cannot write '{target}': {ex}") from ex

    return target


def summary_dict(result: SweepResult) -> dict[str, Any]:
    """JSON view of the seed summary."""

    return {
        "experiment": str(result.experiment),
        "metadata": result.metadata,
        "summary": [
            {"knob": e.knob, "value": e.value, "method": e.method, "task": e.task, "mean": e.score, "std": e.std}
            for e in result.summary()
        ],
    }


def write_json(data: Any, path: Path | str) -> Path:
    """Writes `data` as indented JSON with sorted keys.

    Raises:
        CheckpointIOError: If the file cannot be written.
    """

    target = Path(path)
    try:
        with open(target, "w", encoding="utf-8", newline="\n") as f:
            json.dump(data, f, indent=2, sort_keys=True)
            f.write("\n")
    except OSError as ex:
        raise CheckpointIOError(f"Cannot write '{target}': {ex}") from ex

    return target

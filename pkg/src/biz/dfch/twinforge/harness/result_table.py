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

"""Result rows of an experiment and their seed aggregation."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import Any

from .metrics import mean_std

NORMALIZED_TASK = "normalized"
UNSEEN_TASK = "unseen"
ALL_SEEDS = "all"
_AGGREGATED_TASKS = (NORMALIZED_TASK, UNSEEN_TASK)


@dataclass(frozen=True)
class ResultRow:  # pylint: disable=R0902
    """One score of one method in one experiment cell.

    `task` is a task index, `normalized` for the normalized score, or
    `unseen` for the raw score on a held-out task. `std` is only set on
    summary rows.
    """

    knob: str
    value: str
    method: str
    seed: str
    task: str
    score: float
    std: float | None = None


def score_rows(  # pylint: disable=R0913,R0917
    knob: str,
    value: object,
    method: str,
    seed: int,
    scores: Sequence[float],
    normalized: float | None,
) -> list[ResultRow]:
    """Rows of the per-task scores followed by the normalized score."""

    rows = [ResultRow(knob, str(value), str(method), str(seed), str(t), float(s)) for t, s in enumerate(scores)]
    if normalized is not None:
        rows.append(ResultRow(knob, str(value), str(method), str(seed), NORMALIZED_TASK, float(normalized)))

    return rows


@dataclass(frozen=True)
class SweepResult:
    """All rows of one experiment plus descriptive metadata."""

    experiment: str
    rows: tuple[ResultRow, ...]
    metadata: dict[str, Any] = field(default_factory=dict)

    def summary(self) -> list[ResultRow]:
        """Mean and standard deviation over seeds of the normalized and unseen rows.

        Rows keep the order in which their (value, method, task) first appears.
        """

        groups: dict[tuple[str, str, str, str], list[float]] = {}
        for row in self.rows:
            if row.task not in _AGGREGATED_TASKS:
                continue
            groups.setdefault((row.knob, row.value, row.method, row.task), []).append(row.score)

        result: list[ResultRow] = []
        for (knob, value, method, task), scores in groups.items():
            mean, std = mean_std(scores)
            result.append(ResultRow(knob, value, method, ALL_SEEDS, task, mean, std))

        return result

    def mean_of(self, method: str, value: str | None = None, task: str = NORMALIZED_TASK) -> float:
        """The seed mean of one method's aggregated score.

        Raises:
            KeyError: If there is no such summary row.
        """

        for row in self.summary():
            if row.method == method and row.task == task and (value is None or row.value == value):
                return row.score

        raise KeyError(f"No summary row for method '{method}', value '{value}', task '{task}'.")

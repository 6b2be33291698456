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

"""ExperimentReport class."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .storage import StorageAccount


@dataclass(frozen=True)
class ExperimentReport:  # pylint: disable=R0902
    """Outcome of one inference run.

    `normalized_score` is computed from `per_task_scores` and `ft_scores`.
    `wall_time` is kept out of `to_dict` so that written reports are
    reproducible byte for byte.
    """

    per_task_scores: tuple[float, ...]
    ft_scores: tuple[float, ...]
    normalized_score: float
    merge_count: int
    config: dict[str, Any] = field(default_factory=dict)
    wall_time: float = 0.0
    storage: StorageAccount | None = None

    def to_dict(self) -> dict[str, Any]:
        """Serializable view without the wall time."""

        return {
            "per_task_scores": {str(t): s for t, s in enumerate(self.per_task_scores)},
            "ft_scores": {str(t): s for t, s in enumerate(self.ft_scores)},
            "normalized_score": self.normalized_score,
            "merge_count": self.merge_count,
            "config": self.config,
            "storage_bytes": None if self.storage is None else self.storage.to_dict(),
        }

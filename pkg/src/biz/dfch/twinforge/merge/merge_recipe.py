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

"""MergeRecipe class."""

from __future__ import annotations

import math
from dataclasses import dataclass

from ..errors import ArgumentError
from .merge_method import MergeMethod

DEFAULT_GAMMA_GRID: tuple[float, ...] = (0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0)


@dataclass(frozen=True)
class MergeRecipe:  # pylint: disable=R0902
    """Parameters of one merge.

    `gammas` of `None` selects the scaling coefficient by validation grid
    search over `gamma_grid`. `twin_rank` of `None` keeps the full rank of
    every matrix. `shared_method` builds the shared expert of a twin merge.
    """

    method: MergeMethod = MergeMethod.TWIN
    gammas: tuple[float, ...] | None = None
    ties_density: float = 0.2
    ties_lambda: float | None = None
    dare_drop_rate: float | None = None
    twin_rank: int | None = None
    shared_method: MergeMethod = MergeMethod.TASK_ARITHMETIC
    gamma_grid: tuple[float, ...] = DEFAULT_GAMMA_GRID

    def __post_init__(self):
        assert isinstance(self.method, MergeMethod), type(self.method)
        assert isinstance(self.shared_method, MergeMethod), type(self.shared_method)

        if self.shared_method == MergeMethod.TWIN:
            raise ArgumentError("The shared expert cannot itself be a twin merge.")
        if not 0.0 < self.ties_density <= 1.0:
            raise ArgumentError(f"ties_density must be in (0, 1], got '{self.ties_density}'.")
        if self.ties_lambda is not None and not math.isfinite(self.ties_lambda):
            raise ArgumentError(f"ties_lambda must be finite, got '{self.ties_lambda}'.")
        if self.dare_drop_rate is not None and not 0.0 <= self.dare_drop_rate < 1.0:
            raise ArgumentError(f"dare_drop_rate must be in [0, 1), got '{self.dare_drop_rate}'.")
        if self.twin_rank is not None and self.twin_rank < 1:
            raise ArgumentError(f"twin_rank must be positive, got '{self.twin_rank}'.")
        if self.gammas is not None and not all(math.isfinite(e) for e in self.gammas):
            raise ArgumentError(f"gammas must be finite: {self.gammas}.")
        if not self.gamma_grid or not all(math.isfinite(e) for e in self.gamma_grid):
            raise ArgumentError(f"gamma_grid must be a non-empty list of finite values: {self.gamma_grid}.")

    def gammas_for(self, task_count: int) -> tuple[float, ...] | None:
        """Returns per-task coefficients, broadcasting a single value to all tasks.

        Raises:
            ArgumentError: If the number of coefficients does not match `task_count`.
        """

        if self.gammas is None:
            return None

        if len(self.gammas) == 1:
            return tuple(self.gammas) * task_count

        if len(self.gammas) != task_count:
            raise ArgumentError(f"{len(self.gammas)} gammas given for {task_count} tasks.")

        return tuple(self.gammas)

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

"""Router inputs from the shared expert."""

from __future__ import annotations

import numpy as np

from ..toyzoo import SplitName, TaskSuite, ToyModel


def embed(shared: ToyModel, x: np.ndarray) -> np.ndarray:
    """Penultimate activations of the shared expert: a vector for one input,
    an (n x h) matrix for a batch.

    Raises:
        ShapeError: If `x` does not match the model input dimension.
    """

    assert isinstance(shared, ToyModel)

    values = np.asarray(x)
    result = shared.embed(values)

    return result[0] if values.ndim == 1 else result


def embed_suite(
    shared: ToyModel,
    suite: TaskSuite,
    split: SplitName = SplitName.VALIDATION,
    max_items_per_task: int | None = None,
) -> tuple[np.ndarray, np.ndarray]:
    """Embeddings and task ids of the `split` of every task, in task order."""

    embeddings: list[np.ndarray] = []
    task_ids: list[np.ndarray] = []
    for t, task in enumerate(suite.tasks):
        data = task.split(split)
        x = data.x if max_items_per_task is None else data.x[:max_items_per_task]
        embeddings.append(embed(shared, x))
        task_ids.append(np.full(x.shape[0], t, dtype=np.int64))

    return np.concatenate(embeddings), np.concatenate(task_ids)

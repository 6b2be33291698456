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

"""Classification accuracy of toy models."""

from __future__ import annotations

import numpy as np

from ..checkpoint import Checkpoint
from ..errors import DataError
from .architecture import Architecture
from .split_name import SplitName
from .task_suite import TaskSplit, TaskSuite
from .toy_model import ToyModel


def score(m: ToyModel, dataset: TaskSplit) -> float:
    """Accuracy of `m` on `dataset`, in [0, 1].

    Raises:
        DataError: If the dataset is empty.
    """

    assert isinstance(m, ToyModel)
    assert isinstance(dataset, TaskSplit)

    if len(dataset) == 0:
        raise DataError("Cannot score an empty dataset.")

    return float(np.mean(m.predict(dataset.x) == dataset.y))


def score_tasks(
    params: Checkpoint,
    architecture: Architecture,
    suite: TaskSuite,
    split: SplitName = SplitName.TEST,
) -> list[float]:
    """Accuracy of one checkpoint on the `split` of every task."""

    model = ToyModel(architecture=architecture, params=params)

    return [score(model, task.split(split)) for task in suite.tasks]

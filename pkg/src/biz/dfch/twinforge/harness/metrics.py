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

"""Score metrics."""

from __future__ import annotations

import math
from collections.abc import Sequence

import numpy as np

from ..errors import ArgumentError, MetricError


def normalized_score(scores: Sequence[float], ft_scores: Sequence[float]) -> float:
    """Mean ratio of merged to fine-tuned score per task, times 100.

    The value exceeds 100 when a merged model beats its expert.

    Raises:
        ArgumentError: If the lengths differ or are zero.
        MetricError: If a reference score is not positive.
    """

    if len(scores) != len(ft_scores) or not scores:
        raise ArgumentError(f"Expected equally many non-zero scores, got {len(scores)} and {len(ft_scores)}.")

    ratios: list[float] = []
    for task, (value, reference) in enumerate(zip(scores, ft_scores, strict=True)):
        if not math.isfinite(reference) or reference <= 0.0:
            raise MetricError(f"Task {task}: reference score must be positive, got {reference}.")
        ratios.append(value / reference)

    return 100.0 * math.fsum(ratios) / len(ratios)


def mean_std(values: Sequence[float]) -> tuple[float, float]:
    """Mean and population standard deviation."""

    if not values:
        raise ArgumentError("Cannot aggregate an empty list.")

    data = np.asarray(values, dtype=np.float64)
    return float(np.mean(data)), float(np.std(data))

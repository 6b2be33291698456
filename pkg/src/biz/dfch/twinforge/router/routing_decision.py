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

"""RoutingDecision class."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# exp(-1e9) underflows to 0, so the softmax is exactly one-hot.
_EXCLUDED_LOGIT = -1e9


def softmax(logits: np.ndarray) -> np.ndarray:
    """Numerically stable softmax along the last axis, in float64."""

    values = np.asarray(logits, dtype=np.float64)
    shifted = values - np.max(values, axis=-1, keepdims=True)
    exps = np.exp(shifted)

    return exps / np.sum(exps, axis=-1, keepdims=True)


@dataclass(frozen=True)
class RoutingDecision:
    """Merging weights w = softmax(logits) over T tasks."""

    weights: np.ndarray
    logits: np.ndarray

    def __post_init__(self):
        assert self.weights.shape == self.logits.shape and self.weights.ndim == 1

    @staticmethod
    def from_logits(logits: np.ndarray) -> RoutingDecision:
        """Builds a decision from raw logits."""

        values = np.asarray(logits, dtype=np.float64).reshape(-1)
        return RoutingDecision(weights=softmax(values), logits=values)

    @staticmethod
    def one_hot(task: int, task_count: int) -> RoutingDecision:
        """A decision selecting exactly one task."""

        logits = np.full(task_count, _EXCLUDED_LOGIT, dtype=np.float64)
        logits[task] = 0.0

        return RoutingDecision.from_logits(logits)

    @property
    def task(self) -> int:
        """Index of the highest weight (first on ties)."""

        return int(np.argmax(self.logits))
